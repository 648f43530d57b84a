#include "dunkl/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

constexpr double kFloatTol = 1e-12;

ExactReal dot(const EVec& a, const EVec& b) {
    ExactReal s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double dot_d(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> to_doubles(const EVec& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
    return out;
}

bool lex_positive(const EVec& v) {
    for (const auto& c : v) {
        int s = c.sign();
        if (s != 0) return s > 0;
    }
    return false;
}

bool lex_positive_d(const std::vector<double>& v) {
    for (double c : v) {
        if (std::abs(c) > kFloatTol) return c > 0;
    }
    return false;
}

int find_root_exact(const std::vector<EVec>& roots, const EVec& w) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == w) return static_cast<int>(i);
    return -1;
}

int find_root_d(const std::vector<std::vector<double>>& roots, const std::vector<double>& w,
                double tol) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        double m = 0;
        for (std::size_t k = 0; k < w.size(); ++k) m = std::max(m, std::abs(roots[i][k] - w[k]));
        if (m <= tol) return static_cast<int>(i);
    }
    return -1;
}

void finalize(RootSystemSpec& spec) {
    spec.roots_d.clear();
    if (spec.exact)
        for (const auto& r : spec.roots) spec.roots_d.push_back(to_doubles(r));
    spec.positive.clear();
    for (std::size_t i = 0; i < spec.roots_d.size(); ++i) {
        bool pos = spec.exact ? lex_positive(spec.roots[i]) : lex_positive_d(spec.roots_d[i]);
        if (pos) spec.positive.push_back(i);
    }
}

void check_kappas(const std::vector<Rational>& kappas) {
    for (const auto& k : kappas)
        if (k < 0) throw std::invalid_argument("negative multiplicity rejected");
}

}  // namespace

bool RootSystemSpec::kappa_all_zero() const {
    for (const auto& k : kappa)
        if (k != 0) return false;
    return true;
}

Rational RootSystemSpec::kappa_sum_positive() const {
    Rational s(0);
    for (auto i : positive) s += kappa[i];
    return s;
}

std::string RootSystemSpec::label() const {
    std::ostringstream os;
    if (family == "z2")
        os << "Z2^" << dim;
    else if (family == "i2")
        os << "I2(" << m << ")";
    else
        os << "custom(d=" << dim << ")";
    return os.str();
}

EVec reflect(const EVec& v, const EVec& x) {
    if (v.size() != x.size()) throw std::invalid_argument("reflection dimension mismatch");
    ExactReal vv = dot(v, v);
    if (vv.is_zero()) throw std::invalid_argument("reflection through zero vector");
    ExactReal f = ExactReal(2) * dot(x, v) / vv;
    EVec y = x;
    for (std::size_t i = 0; i < x.size(); ++i) y[i] -= f * v[i];
    return y;
}

std::vector<double> reflect_d(const std::vector<double>& v, const std::vector<double>& x) {
    double vv = dot_d(v, v);
    if (vv == 0) throw std::invalid_argument("reflection through zero vector");
    double f = 2 * dot_d(x, v) / vv;
    std::vector<double> y = x;
    for (std::size_t i = 0; i < x.size(); ++i) y[i] -= f * v[i];
    return y;
}

EMat reflection_matrix(const EVec& v) {
    std::size_t d = v.size();
    ExactReal vv = dot(v, v);
    EMat m = emat_identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m[i][j] -= ExactReal(2) * v[i] * v[j] / vv;
    return m;
}

RootSystemSpec build_z2(int d, const std::vector<Rational>& kappas) {
    if (d < 2) throw std::invalid_argument("Z2^d requires d >= 2");
    if (static_cast<int>(kappas.size()) != d)
        throw std::invalid_argument("Z2^d requires d multiplicities");
    check_kappas(kappas);
    RootSystemSpec spec;
    spec.dim = d;
    spec.exact = true;
    spec.family = "z2";
    for (int s : {1, -1})
        for (int i = 0; i < d; ++i) {
            EVec v(d, ExactReal(0));
            v[i] = ExactReal(s);
            spec.roots.push_back(v);
            spec.kappa.push_back(kappas[i]);
        }
    finalize(spec);
    return spec;
}

RootSystemSpec build_i2(int m, const std::vector<Rational>& kappas) {
    if (m < 2) throw std::invalid_argument("I2(m) requires m >= 2");
    std::size_t classes = (m % 2 == 0) ? 2 : 1;
    if (kappas.size() != classes)
        throw std::invalid_argument("I2(" + std::to_string(m) + ") needs " +
                                    std::to_string(classes) + " multiplicity value(s)");
    check_kappas(kappas);
    RootSystemSpec spec;
    spec.dim = 2;
    spec.family = "i2";
    spec.m = m;
    spec.exact = (m == 2 || m == 3 || m == 4 || m == 6);
    if (spec.exact) {
        // 2*(cos(j*pi/m), sin(j*pi/m)), exact in Q(sqrt(2)) or Q(sqrt(3)).
        auto r2 = ExactReal::sqrt_surd(2);
        auto r3 = ExactReal::sqrt_surd(3);
        std::vector<EVec> pos;
        switch (m) {
            case 2:
                pos = {{ExactReal(2), ExactReal(0)}, {ExactReal(0), ExactReal(2)}};
                break;
            case 3:
                pos = {{ExactReal(2), ExactReal(0)}, {ExactReal(1), r3}, {-ExactReal(1), r3}};
                break;
            case 4:
                pos = {{ExactReal(2), ExactReal(0)},
                       {r2, r2},
                       {ExactReal(0), ExactReal(2)},
                       {-r2, r2}};
                break;
            case 6:
                pos = {{ExactReal(2), ExactReal(0)}, {r3, ExactReal(1)}, {ExactReal(1), r3},
                       {ExactReal(0), ExactReal(2)}, {-ExactReal(1), r3}, {-r3, ExactReal(1)}};
                break;
        }
        for (int sgn : {1, -1})
            for (int j = 0; j < m; ++j) {
                EVec v = pos[j];
                if (sgn < 0)
                    for (auto& c : v) c = -c;
                spec.roots.push_back(v);
                spec.kappa.push_back(kappas[j % classes]);
            }
        finalize(spec);
    } else {
        const double pi = std::acos(-1.0);
        for (int sgn : {1, -1})
            for (int j = 0; j < m; ++j) {
                double a = j * pi / m;
                spec.roots_d.push_back({sgn * std::cos(a), sgn * std::sin(a)});
                spec.kappa.push_back(kappas[j % classes]);
            }
        for (std::size_t i = 0; i < spec.roots_d.size(); ++i)
            if (lex_positive_d(spec.roots_d[i])) spec.positive.push_back(i);
    }
    return spec;
}

RootSystemSpec build_custom(int d, const std::vector<std::vector<Rational>>& roots,
                            const std::vector<Rational>& kappas) {
    if (d < 2) throw std::invalid_argument("root systems require d >= 2");
    if (roots.size() != kappas.size())
        throw std::invalid_argument("one multiplicity per root required");
    check_kappas(kappas);
    RootSystemSpec spec;
    spec.dim = d;
    spec.exact = true;
    spec.family = "custom";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (static_cast<int>(roots[i].size()) != d)
            throw std::invalid_argument("root dimension mismatch");
        EVec v(d);
        for (int k = 0; k < d; ++k) v[k] = ExactReal(roots[i][k]);
        if (find_root_exact(spec.roots, v) < 0) {
            spec.roots.push_back(v);
            spec.kappa.push_back(kappas[i]);
            EVec nv(d);
            for (int k = 0; k < d; ++k) nv[k] = -v[k];
            if (find_root_exact(spec.roots, nv) < 0) {
                spec.roots.push_back(nv);
                spec.kappa.push_back(kappas[i]);
            }
        }
    }
    finalize(spec);
    return spec;
}

ValidationReport validate(const RootSystemSpec& spec) {
    ValidationReport rep;
    auto add = [&](const std::string& s) { rep.violations.push_back(s); };
    std::size_t n = spec.exact ? spec.roots.size() : spec.roots_d.size();
    if (n == 0) {
        add("empty root set");
        return rep;
    }
    if (spec.kappa.size() != n) add("multiplicity list does not match root list");
    for (const auto& k : spec.kappa)
        if (k < 0) add("negative multiplicity");

    auto root_str = [&](std::size_t i) {
        std::ostringstream os;
        os << "(";
        for (int k = 0; k < spec.dim; ++k) {
            if (k) os << ",";
            if (spec.exact)
                os << spec.roots[i][k].str();
            else
                os << spec.roots_d[i][k];
        }
        os << ")";
        return os.str();
    };

    if (spec.exact) {
        for (std::size_t i = 0; i < n; ++i) {
            EVec neg = spec.roots[i];
            for (auto& c : neg) c = -c;
            if (find_root_exact(spec.roots, neg) < 0)
                add("axiom (1): missing -v for v = " + root_str(i));
            // R meets the line through v only in {+-v}.
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                bool proportional = true;
                for (int a = 0; a < spec.dim && proportional; ++a)
                    for (int b = a + 1; b < spec.dim; ++b)
                        if (spec.roots[i][a] * spec.roots[j][b] !=
                            spec.roots[i][b] * spec.roots[j][a]) {
                            proportional = false;
                            break;
                        }
                if (proportional && spec.roots[j] != neg && i < j)
                    add("axiom (1): extra multiple of " + root_str(i) + ": " + root_str(j));
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                EVec w = reflect(spec.roots[i], spec.roots[j]);
                int idx = find_root_exact(spec.roots, w);
                if (idx < 0)
                    add("axiom (2): sigma_" + root_str(i) + " maps " + root_str(j) +
                        " outside R");
                else if (spec.kappa.size() == n && spec.kappa[idx] != spec.kappa[j])
                    add("multiplicity not G-invariant on orbit of " + root_str(j));
            }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> neg = spec.roots_d[i];
            for (auto& c : neg) c = -c;
            if (find_root_d(spec.roots_d, neg, kFloatTol) < 0)
                add("axiom (1): missing -v for v = " + root_str(i));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto w = reflect_d(spec.roots_d[i], spec.roots_d[j]);
                int idx = find_root_d(spec.roots_d, w, 1e-9);
                if (idx < 0)
                    add("axiom (2): sigma_" + root_str(i) + " maps " + root_str(j) +
                        " outside R");
                else if (spec.kappa.size() == n && spec.kappa[idx] != spec.kappa[j])
                    add("multiplicity not G-invariant on orbit of " + root_str(j));
            }
    }

    // Positive subsystem partitions R.
    std::vector<bool> pos(n, false);
    for (auto i : spec.positive) {
        if (i >= n) {
            add("positive index out of range");
            continue;
        }
        pos[i] = true;
    }
    if (2 * spec.positive.size() != n)
        add("positive subsystem does not contain half of R");
    return rep;
}

namespace {

std::vector<ExactReal> flatten(const EMat& m) {
    std::vector<ExactReal> out;
    for (const auto& r : m) out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::vector<std::vector<double>> mat_to_d(const EMat& m) {
    std::vector<std::vector<double>> out;
    for (const auto& r : m) {
        std::vector<double> row;
        for (const auto& c : r) row.push_back(c.to_double());
        out.push_back(row);
    }
    return out;
}

std::vector<std::vector<double>> matmul_d(const std::vector<std::vector<double>>& a,
                                          const std::vector<std::vector<double>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace

ReflectionGroup generate_group(const RootSystemSpec& spec, std::size_t cap) {
    ReflectionGroup g;
    g.exact = spec.exact;
    if (spec.exact) {
        std::vector<EMat> gens;
        for (auto i : spec.positive) gens.push_back(reflection_matrix(spec.roots[i]));
        std::set<std::vector<ExactReal>> seen;
        std::vector<EMat> todo{emat_identity(spec.dim)};
        seen.insert(flatten(todo[0]));
        g.elements.push_back(todo[0]);
        while (!todo.empty()) {
            EMat cur = std::move(todo.back());
            todo.pop_back();
            for (const auto& s : gens) {
                EMat nxt = emat_mul(s, cur);
                auto key = flatten(nxt);
                if (seen.insert(std::move(key)).second) {
                    if (g.elements.size() + 1 > cap)
                        throw std::runtime_error("group enumeration cap exceeded");
                    g.elements.push_back(nxt);
                    todo.push_back(std::move(nxt));
                }
            }
        }
        for (const auto& e : g.elements) g.elements_d.push_back(mat_to_d(e));
    } else {
        std::vector<std::vector<std::vector<double>>> gens;
        std::size_t d = spec.dim;
        for (auto i : spec.positive) {
            const auto& v = spec.roots_d[i];
            double vv = dot_d(v, v);
            std::vector<std::vector<double>> mtx(d, std::vector<double>(d, 0.0));
            for (std::size_t a = 0; a < d; ++a) {
                mtx[a][a] = 1.0;
                for (std::size_t b = 0; b < d; ++b) mtx[a][b] -= 2 * v[a] * v[b] / vv;
            }
            gens.push_back(mtx);
        }
        auto same = [&](const auto& a, const auto& b) {
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j)
                    if (std::abs(a[i][j] - b[i][j]) > 1e-9) return false;
            return true;
        };
        std::vector<std::vector<std::vector<double>>> elems;
        std::vector<std::vector<double>> id(d, std::vector<double>(d, 0.0));
        for (std::size_t i = 0; i < d; ++i) id[i][i] = 1.0;
        elems.push_back(id);
        std::size_t head = 0;
        while (head < elems.size()) {
            auto cur = elems[head++];
            for (const auto& s : gens) {
                auto nxt = matmul_d(s, cur);
                bool found = false;
                for (const auto& e : elems)
                    if (same(e, nxt)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    if (elems.size() + 1 > cap)
                        throw std::runtime_error("group enumeration cap exceeded");
                    elems.push_back(nxt);
                }
            }
        }
        g.elements_d = std::move(elems);
    }
    return g;
}

RootSystemSpec flip_positive(const RootSystemSpec& spec) {
    RootSystemSpec out = spec;
    std::vector<bool> pos(spec.exact ? spec.roots.size() : spec.roots_d.size(), false);
    for (auto i : spec.positive) pos[i] = true;
    out.positive.clear();
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (!pos[i]) out.positive.push_back(i);
    return out;
}

}  // namespace dunkl
