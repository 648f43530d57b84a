#include "dunkl/rational.hpp"

#include <sstream>

namespace dunkl {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("decimal notation not accepted, use p/q: " + s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

ExactReal::ExactReal(Rational a, Rational b, int s) : a_(std::move(a)), b_(std::move(b)), s_(s) {
    if (s_ <= 0) throw std::invalid_argument("surd must be positive");
    normalize();
}

void ExactReal::normalize() {
    if (s_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) s_ = 1;
}

const Rational& ExactReal::as_rational() const {
    if (b_ != 0) throw std::domain_error("value is not rational: " + str());
    return a_;
}

int ExactReal::sign() const {
    auto sgn = [](const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |a| with |b|*sqrt(s) via squares.
    Rational a2 = a_ * a_, b2s = b_ * b_ * s_;
    if (a2 == b2s) return 0;
    return a2 > b2s ? sa : sb;
}

double ExactReal::to_double() const {
    double v = static_cast<double>(a_);
    if (b_ != 0) v += static_cast<double>(b_) * std::sqrt(static_cast<double>(s_));
    return v;
}

std::string ExactReal::str() const {
    if (b_ == 0) return rational_str(a_);
    std::ostringstream os;
    os << rational_str(a_) << (b_ > 0 ? "+" : "-");
    Rational ab = b_ > 0 ? b_ : Rational(-b_);
    if (ab != 1) os << rational_str(ab) << "*";
    os << "sqrt(" << s_ << ")";
    return os.str();
}

int ExactReal::merge_surd(const ExactReal& x, const ExactReal& y) {
    if (x.b_ == 0) return y.s_;
    if (y.b_ == 0) return x.s_;
    if (x.s_ != y.s_)
        throw std::domain_error("mixed quadratic extensions: sqrt(" + std::to_string(x.s_) +
                                ") vs sqrt(" + std::to_string(y.s_) + ")");
    return x.s_;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
    s_ = merge_surd(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) {
    s_ = merge_surd(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& o) {
    int s = merge_surd(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * s;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    s_ = s;
    normalize();
    return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.b_ == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        normalize();
        return *this;
    }
    // Multiply by the conjugate of o.
    Rational denom = o.a_ * o.a_ - o.b_ * o.b_ * o.s_;
    ExactReal conj(o.a_, -o.b_, o.s_);
    *this *= conj;
    a_ /= denom;
    b_ /= denom;
    normalize();
    return *this;
}

}  // namespace dunkl
