#include "dunkl/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dunkl {

MPoly::MPoly(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
}

MPoly::MPoly(int dim, const ExactReal& constant) : MPoly(dim) {
    add_term(Mono(dim, 0), constant);
}

MPoly MPoly::variable(int dim, int axis) {
    if (axis < 1 || axis > dim) throw std::out_of_range("variable axis out of range");
    Mono m(dim, 0);
    m[axis - 1] = 1;
    return monomial(m, ExactReal(1));
}

MPoly MPoly::monomial(const Mono& exponents, const ExactReal& coeff) {
    MPoly p(static_cast<int>(exponents.size()));
    p.add_term(exponents, coeff);
    return p;
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return mono_degree(terms_.begin()->first) == mono_degree(terms_.rbegin()->first);
}

void MPoly::add_term(const Mono& m, const ExactReal& c) {
    if (static_cast<int>(m.size()) != dim_) throw std::invalid_argument("exponent length != dim");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExactReal MPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactReal(0) : it->second;
}

void MPoly::check_dim(const MPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

MPoly MPoly::operator-() const {
    MPoly r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& p, const MPoly& q) {
    p.check_dim(q);
    MPoly r(p.dim_);
    Mono m(p.dim_, 0);
    for (const auto& [mp, cp] : p.terms_) {
        for (const auto& [mq, cq] : q.terms_) {
            for (int k = 0; k < p.dim_; ++k) m[k] = mp[k] + mq[k];
            r.add_term(m, cp * cq);
        }
    }
    return r;
}

MPoly MPoly::scaled(const ExactReal& c) const {
    MPoly r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

MPoly MPoly::partial(int axis) const {
    if (axis < 1 || axis > dim_) throw std::out_of_range("partial axis out of range");
    int j = axis - 1;
    MPoly r(dim_);
    for (const auto& [m, c] : terms_) {
        if (m[j] == 0) continue;
        Mono mm = m;
        mm[j] -= 1;
        r.add_term(mm, c * ExactReal(m[j]));
    }
    return r;
}

ExactReal MPoly::evaluate_exact(const std::vector<ExactReal>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    ExactReal acc(0);
    for (const auto& [m, c] : terms_) {
        ExactReal t = c;
        for (int k = 0; k < dim_; ++k)
            for (int e = 0; e < m[k]; ++e) t *= x[k];
        acc += t;
    }
    return acc;
}

double MPoly::evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (int k = 0; k < dim_; ++k)
            for (int e = 0; e < m[k]; ++e) t *= x[k];
        acc += t;
    }
    return acc;
}

MPoly MPoly::homogeneous_part(int n) const {
    MPoly r(dim_);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) == n) r.terms_.emplace(m, c);
    return r;
}

MPoly MPoly::substitute_linear(const std::vector<std::vector<ExactReal>>& rows) const {
    if (static_cast<int>(rows.size()) != dim_) throw std::invalid_argument("substitution rows != dim");
    // Lazily extended power tables per variable.
    std::vector<std::vector<MPoly>> powers(dim_);
    auto power_of = [&](int j, int e) -> const MPoly& {
        auto& tab = powers[j];
        if (tab.empty()) {
            tab.emplace_back(dim_, ExactReal(1));
            MPoly lin(dim_);
            for (int k = 0; k < dim_; ++k) {
                Mono m(dim_, 0);
                m[k] = 1;
                lin.add_term(m, rows[j][k]);
            }
            tab.push_back(lin);
        }
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * tab[1]);
        return tab[e];
    };
    MPoly r(dim_);
    for (const auto& [m, c] : terms_) {
        MPoly t(dim_, c);
        for (int j = 0; j < dim_; ++j)
            if (m[j] > 0) t = t * power_of(j, m[j]);
        r += t;
    }
    return r;
}

std::vector<Mono> monomial_basis_exponents(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("bad monomial basis parameters");
    std::vector<Mono> out;
    Mono cur(d, 0);
    // Lexicographically descending: first coordinate from n down to 0.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::vector<MPoly> monomial_basis(int n, int d) {
    std::vector<MPoly> out;
    for (const auto& m : monomial_basis_exponents(n, d))
        out.push_back(MPoly::monomial(m, ExactReal(1)));
    return out;
}

MPoly substitute_linear_form(const std::vector<ExactReal>& g_coeffs,
                             const std::vector<ExactReal>& xi) {
    int d = static_cast<int>(xi.size());
    MPoly lin(d);
    for (int k = 0; k < d; ++k) {
        Mono m(d, 0);
        m[k] = 1;
        lin.add_term(m, xi[k]);
    }
    MPoly r(d), pw(d, ExactReal(1));
    for (std::size_t k = 0; k < g_coeffs.size(); ++k) {
        if (k > 0) pw = pw * lin;
        if (!g_coeffs[k].is_zero()) r += pw.scaled(g_coeffs[k]);
    }
    return r;
}

MPoly divide_by_linear_form(const MPoly& p, const std::vector<ExactReal>& v) {
    int d = p.dim();
    if (static_cast<int>(v.size()) != d) throw std::invalid_argument("linear form dimension mismatch");
    int piv = -1;
    for (int k = 0; k < d; ++k)
        if (!v[k].is_zero()) { piv = k; break; }
    if (piv < 0) throw std::invalid_argument("zero linear form");

    // Leading order: highest pivot exponent first, any fixed tie-break after.
    auto leads = [&](const Mono& a, const Mono& b) {
        if (a[piv] != b[piv]) return a[piv] > b[piv];
        return a < b;
    };

    MPoly rem = p;
    MPoly quo(d);
    while (!rem.is_zero()) {
        const auto& tm = rem.terms();
        auto lead = tm.begin();
        for (auto it = std::next(tm.begin()); it != tm.end(); ++it)
            if (leads(it->first, lead->first)) lead = it;
        if (lead->first[piv] == 0)
            throw std::logic_error("polynomial not divisible by linear form");
        Mono qm = lead->first;
        qm[piv] -= 1;
        ExactReal qc = lead->second / v[piv];
        quo.add_term(qm, qc);
        Mono sub = qm;
        for (int k = 0; k < d; ++k) {
            if (v[k].is_zero()) continue;
            sub[k] += 1;
            rem.add_term(sub, -(qc * v[k]));
            sub[k] -= 1;
        }
    }
    return quo;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    // Highest degree first; within a degree keep the basis order.
    std::vector<const std::pair<const Mono, ExactReal>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return mono_degree(a->first) > mono_degree(b->first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const Mono& m = t->first;
        const ExactReal& c = t->second;
        bool neg = c.sign() < 0;
        ExactReal mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool constant = mono_degree(m) == 0;
        bool unit = mag == ExactReal(1);
        if (!unit || constant) {
            if (mag.is_rational())
                os << rational_str(mag.as_rational());
            else
                os << "(" << mag.str() << ")";
            if (!constant) os << "*";
        }
        bool firstvar = true;
        for (int k = 0; k < dim_; ++k) {
            if (m[k] == 0) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            os << "x" << (k + 1);
            if (m[k] > 1) os << "^" << m[k];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    int dim;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + what);
    }
    BigInt read_int() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return BigInt(s.substr(start, i - start));
    }
    // factor := integer [/ integer] | x<k> [^ e]
    void read_factor(Rational& coeff, Mono& mono) {
        skip_ws();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == 'x') {
            ++i;
            BigInt idx = read_int();
            if (idx < 1 || idx > dim) fail("variable index out of range");
            int e = 1;
            if (eat('^')) e = static_cast<int>(read_int());
            mono[static_cast<int>(idx) - 1] += e;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            BigInt num = read_int();
            if (eat('/')) {
                BigInt den = read_int();
                if (den == 0) fail("zero denominator");
                coeff *= Rational(num, den);
            } else {
                coeff *= Rational(num);
            }
        } else {
            fail(std::string("unexpected character '") + s[i] + "'");
        }
    }
    MPoly parse() {
        MPoly p(dim);
        bool first = true;
        while (true) {
            skip_ws();
            if (i >= s.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            int sign = 1;
            if (eat('+')) {
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Rational coeff(1);
            Mono mono(dim, 0);
            read_factor(coeff, mono);
            while (eat('*')) read_factor(coeff, mono);
            p.add_term(mono, ExactReal(sign * coeff));
            first = false;
        }
        return p;
    }
};

}  // namespace

MPoly parse_mpoly(const std::string& text, int dim) {
    // "0" is the canonical empty polynomial.
    Parser ps{text, 0, dim};
    ps.skip_ws();
    if (ps.i < text.size() && text[ps.i] == '0') {
        std::size_t j = ps.i + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == text.size()) return MPoly(dim);
    }
    return ps.parse();
}

}  // namespace dunkl
