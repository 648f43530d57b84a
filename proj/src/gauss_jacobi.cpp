#include "dunkl/gauss_jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

double GaussRule::mass() const { return pairwise_sum(weights); }

double pairwise_sum(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    std::vector<double> cur = v;
    while (cur.size() > 1) {
        std::vector<double> nxt;
        nxt.reserve((cur.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < cur.size(); i += 2) nxt.push_back(cur[i] + cur[i + 1]);
        if (cur.size() % 2 == 1) nxt.push_back(cur.back());
        cur = std::move(nxt);
    }
    return cur[0];
}

namespace {

// Monic Jacobi recurrence x p_{k-1} = p_k + a_k p_{k-1} + b_k p_{k-2},
// 1-indexed; b_1 is unused.
void jacobi_recurrence(int n, double al, double be, std::vector<double>& a,
                       std::vector<double>& b) {
    a.assign(n + 1, 0.0);
    b.assign(n + 1, 0.0);
    double s = al + be;
    a[1] = (be - al) / (s + 2);
    for (int k = 2; k <= n; ++k) {
        double t = 2 * (k - 1) + s;
        a[k] = (be * be - al * al) / (t * (t + 2));
    }
    if (n >= 2) b[2] = 4 * (1 + al) * (1 + be) / ((2 + s) * (2 + s) * (3 + s));
    for (int k = 3; k <= n; ++k) {
        double km = k - 1;
        double t = 2 * km + s;
        b[k] = 4 * km * (km + al) * (km + be) * (km + s) / (t * t * (t + 1) * (t - 1));
    }
}

// Symmetric tridiagonal QL with implicit shifts; d holds the diagonal,
// e the subdiagonal (e[n-1] unused), z the first-row eigenvector components.
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    int n = static_cast<int>(d.size());
    if (n == 1) return;
    e[n - 1] = 0.0;
    const double prec = 2.220446049250313e-16;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= prec * dd) break;
            }
            if (m == l) break;
            if (++iter > 50) throw std::runtime_error("tridiagonal eigensolver failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double ss = 1.0, c = 1.0, p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = ss * e[i];
                double bb = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                ss = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * ss + 2.0 * c * bb;
                p = ss * r;
                d[i + 1] = g + p;
                g = c * r - bb;
                f = z[i + 1];
                z[i + 1] = ss * z[i] + c * f;
                z[i] = c * z[i] - ss * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // Sort ascending, carrying z.
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[k]) k = j;
        if (k != i) {
            std::swap(d[i], d[k]);
            std::swap(z[i], z[k]);
        }
    }
}

}  // namespace

GaussRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("quadrature order must be positive");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("Jacobi exponents must exceed -1");

    std::vector<double> a, b;
    jacobi_recurrence(n, alpha, beta, a, b);
    double mu0 = std::exp((alpha + beta + 1) * std::log(2.0) +
                          std::lgamma(alpha + 1) + std::lgamma(beta + 1) -
                          std::lgamma(alpha + beta + 2));

    std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
    for (int k = 0; k < n; ++k) d[k] = a[k + 1];
    for (int k = 0; k + 1 < n; ++k) e[k] = std::sqrt(b[k + 2]);
    z[0] = 1.0;
    imtqlx(d, e, z);

    // Newton polish using the monic polynomial, then weights from the
    // orthonormal Christoffel sum.
    auto monic_and_deriv = [&](double x, double& pn, double& dpn) {
        double p0 = 1.0, p1 = x - a[1];
        double q0 = 0.0, q1 = 1.0;
        for (int k = 2; k <= n; ++k) {
            double p2 = (x - a[k]) * p1 - b[k] * p0;
            double q2 = p1 + (x - a[k]) * q1 - b[k] * q0;
            p0 = p1; p1 = p2;
            q0 = q1; q1 = q2;
        }
        pn = p1;
        dpn = q1;
    };

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = d[i];
        for (int it = 0; it < 3; ++it) {
            double pn, dpn;
            monic_and_deriv(x, pn, dpn);
            if (dpn == 0.0) break;
            double step = pn / dpn;
            if (!std::isfinite(step) || std::abs(step) > 1e-3) break;
            x -= step;
        }
        rule.nodes[i] = x;
        // Orthonormal polynomials via the symmetric recurrence.
        double t0 = 1.0 / std::sqrt(mu0), t1 = 0.0;
        double sum = t0 * t0;
        for (int k = 1; k < n; ++k) {
            double off = std::sqrt(b[k + 1]);
            double t2 = ((x - a[k]) * t0 - (k >= 2 ? std::sqrt(b[k]) : 0.0) * t1) / off;
            t1 = t0;
            t0 = t2;
            sum += t0 * t0;
        }
        rule.weights[i] = 1.0 / sum;
    }
    return rule;
}

}  // namespace dunkl
