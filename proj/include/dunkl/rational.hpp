// Exact scalar types: arbitrary-precision rationals and the quadratic
// extension Q(sqrt(s)) needed for dihedral root systems.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dunkl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

// Parses "p/q", "p", or "-p/q" exactly. Rejects decimal notation.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& r);

// A number of the form a + b*sqrt(s) with a, b rational and s a fixed
// square-free positive integer. Invariant: b == 0 implies s == 1.
// Mixing two different nontrivial surds is an error; every root system
// we construct lives in a single quadratic extension.
class ExactReal {
public:
    ExactReal() : a_(0), b_(0), s_(1) {}
    ExactReal(int n) : a_(n), b_(0), s_(1) {}
    ExactReal(long n) : a_(n), b_(0), s_(1) {}
    ExactReal(const Rational& a) : a_(a), b_(0), s_(1) {}
    ExactReal(Rational a, Rational b, int s);

    static ExactReal sqrt_surd(int s) { return ExactReal(0, 1, s); }

    const Rational& rat_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    int surd() const { return s_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // Throws if the value carries a nontrivial surd.
    const Rational& as_rational() const;

    int sign() const;
    double to_double() const;
    std::string str() const;

    ExactReal operator-() const { return ExactReal(-a_, -b_, s_); }
    ExactReal& operator+=(const ExactReal& o);
    ExactReal& operator-=(const ExactReal& o);
    ExactReal& operator*=(const ExactReal& o);
    ExactReal& operator/=(const ExactReal& o);

    friend ExactReal operator+(ExactReal x, const ExactReal& y) { return x += y; }
    friend ExactReal operator-(ExactReal x, const ExactReal& y) { return x -= y; }
    friend ExactReal operator*(ExactReal x, const ExactReal& y) { return x *= y; }
    friend ExactReal operator/(ExactReal x, const ExactReal& y) { return x /= y; }

    friend bool operator==(const ExactReal& x, const ExactReal& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.s_ == y.s_;
    }
    friend bool operator!=(const ExactReal& x, const ExactReal& y) { return !(x == y); }

    // Total order for use in ordered containers (not the numeric order).
    friend bool operator<(const ExactReal& x, const ExactReal& y) {
        if (x.s_ != y.s_) return x.s_ < y.s_;
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

private:
    void normalize();
    static int merge_surd(const ExactReal& x, const ExactReal& y);

    Rational a_, b_;
    int s_;
};

}  // namespace dunkl
