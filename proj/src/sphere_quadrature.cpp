#include "dunkl/sphere_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dunkl/gauss_jacobi.hpp"

namespace dunkl {

double weight_eval(const WeightSpec& w, const std::vector<double>& x) {
    double n2 = 0;
    for (double c : x) n2 += c * c;
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
        throw std::invalid_argument("weight_eval requires a unit vector");
    double out = 1.0;
    for (auto i : w.spec.positive) {
        double kap = to_double(w.spec.kappa[i]);
        if (kap == 0.0) continue;
        double ip = 0;
        for (std::size_t k = 0; k < x.size(); ++k) ip += w.spec.roots_d[i][k] * x[k];
        out *= std::pow(std::abs(ip), 2 * kap);
    }
    return out;
}

namespace {

// Half-line rule for int_0^1 t^(2 kap) (1-t^2)^mu f(t) dt via s = 2 t^2 - 1,
// turning the weight into Jacobi (mu, kap - 1/2). Mirrored by the caller.
void half_rule(double kap, double mu, int n, std::vector<double>& t, std::vector<double>& w) {
    auto gj = gauss_jacobi(n, mu, kap - 0.5);
    double c = std::pow(2.0, -(mu + kap + 1.5));
    t.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        t[i] = std::sqrt((1.0 + gj.nodes[i]) / 2.0);
        w[i] = c * gj.weights[i];
    }
}

// Recursive product rule for int_{S^(m-1)} f(x) prod |x_i|^(2 kap_i) d omega,
// unnormalized. kappas has length m.
void z2_sphere_rule(const std::vector<double>& kappas, int n1d,
                    std::vector<std::vector<double>>& nodes, std::vector<double>& weights) {
    std::size_t m = kappas.size();
    if (m == 1) {
        nodes = {{1.0}, {-1.0}};
        weights = {1.0, 1.0};
        return;
    }
    double gamma = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) gamma += kappas[i];
    double mu = gamma + (static_cast<double>(m) - 3.0) / 2.0;
    std::vector<double> t, w;
    half_rule(kappas[m - 1], mu, n1d, t, w);

    std::vector<std::vector<double>> sub_nodes;
    std::vector<double> sub_weights;
    z2_sphere_rule(std::vector<double>(kappas.begin(), kappas.end() - 1), n1d, sub_nodes,
                   sub_weights);

    nodes.clear();
    weights.clear();
    for (std::size_t i = 0; i < t.size(); ++i) {
        double r = std::sqrt(std::max(0.0, 1.0 - t[i] * t[i]));
        for (int sgn : {1, -1}) {
            double tt = sgn * t[i];
            for (std::size_t j = 0; j < sub_nodes.size(); ++j) {
                std::vector<double> x(m);
                for (std::size_t k = 0; k + 1 < m; ++k) x[k] = r * sub_nodes[j][k];
                x[m - 1] = tt;
                nodes.push_back(std::move(x));
                weights.push_back(w[i] * sub_weights[j]);
            }
        }
    }
}

SphereRule build_z2_rule(const RootSystemSpec& spec, int target_degree) {
    int d = spec.dim;
    std::vector<double> kappas(d, 0.0);
    for (auto i : spec.positive) {
        // Each positive root is +-e_k; kappa attaches to that axis.
        int axis = -1;
        for (int k = 0; k < d; ++k)
            if (spec.roots_d[i][k] != 0.0) axis = k;
        kappas[axis] = to_double(spec.kappa[i]);
    }
    int n1d = (target_degree + 2) / 4 + 3;
    SphereRule rule;
    z2_sphere_rule(kappas, n1d, rule.nodes, rule.weights);
    rule.exactness_degree = target_degree;
    return rule;
}

// Circle rule: split at the root hyperplane angles; per-arc Gauss-Jacobi
// absorbing the algebraic endpoint factors of w_kappa.
SphereRule build_circle_rule(const RootSystemSpec& spec, int target_degree) {
    const double pi = std::acos(-1.0);
    struct Split {
        double theta;
        double two_kappa;
    };
    std::vector<Split> splits;
    for (auto i : spec.positive) {
        double kap = to_double(spec.kappa[i]);
        if (kap == 0.0) continue;
        double phi = std::atan2(spec.roots_d[i][1], spec.roots_d[i][0]);
        for (double z : {phi + pi / 2, phi - pi / 2}) {
            double zz = std::fmod(z, 2 * pi);
            if (zz < 0) zz += 2 * pi;
            splits.push_back({zz, 2 * kap});
        }
    }
    if (splits.empty())
        for (double z : {0.0, pi / 2, pi, 3 * pi / 2}) splits.push_back({z, 0.0});
    std::sort(splits.begin(), splits.end(),
              [](const Split& a, const Split& b) { return a.theta < b.theta; });

    WeightSpec wspec{spec};
    auto weight_at = [&](double theta) {
        return weight_eval(wspec, {std::cos(theta), std::sin(theta)});
    };

    int n_arc = target_degree + 48;
    SphereRule rule;
    rule.exactness_degree = target_degree;
    for (std::size_t p = 0; p < splits.size(); ++p) {
        double a = splits[p].theta;
        const Split& right = splits[(p + 1) % splits.size()];
        double b = (p + 1 < splits.size()) ? right.theta : right.theta + 2 * pi;
        double alpha = right.two_kappa, beta = splits[p].two_kappa;
        double half = (b - a) / 2, mid = (b + a) / 2;
        auto gj = gauss_jacobi(n_arc, alpha, beta);
        double scale = half * std::pow(half, alpha) * std::pow(half, beta);
        for (int i = 0; i < n_arc; ++i) {
            double theta = half * gj.nodes[i] + mid;
            // Smooth residual: full weight divided by the absorbed factors.
            double rho = weight_at(theta);
            if (alpha > 0) rho /= std::pow(b - theta, alpha);
            if (beta > 0) rho /= std::pow(theta - a, beta);
            rule.nodes.push_back({std::cos(theta), std::sin(theta)});
            rule.weights.push_back(scale * gj.weights[i] * rho);
        }
    }
    return rule;
}

}  // namespace

SphereRule build_rule(const WeightSpec& w, int target_degree) {
    if (target_degree < 0) throw std::invalid_argument("negative target degree");
    const auto& spec = w.spec;
    SphereRule rule;
    if (spec.family == "z2")
        rule = build_z2_rule(spec, target_degree);
    else if (spec.dim == 2)
        rule = build_circle_rule(spec, target_degree);
    else
        throw std::invalid_argument("unsupported family for sphere quadrature: " + spec.label());
    rule.mass = pairwise_sum(rule.weights);
    for (auto& wt : rule.weights) wt /= rule.mass;
    // Renormalize nodes onto the sphere (guards the 1e-14 invariant).
    for (auto& x : rule.nodes) {
        double n2 = 0;
        for (double c : x) n2 += c * c;
        double inv = 1.0 / std::sqrt(n2);
        for (auto& c : x) c *= inv;
    }
    return rule;
}

double inner_product(const SphereRule& rule, const SphereFn& f, const SphereFn& h) {
    std::vector<double> terms(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        terms[i] = rule.weights[i] * f(rule.nodes[i]) * h(rule.nodes[i]);
    return pairwise_sum(terms);
}

}  // namespace dunkl
