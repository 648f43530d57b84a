// Root systems, positive subsystems, multiplicity functions, and the
// generated reflection group. The built-in families are Z2^d (any d >= 2)
// and dihedral I2(m); m in {2,3,4,6} is carried exactly (coordinates in a
// quadratic extension), other m fall back to floating-point validation.
//
// Roots are stored at a uniform scale (length 2 for the dihedral families).
// Every downstream quantity is scale-invariant in the roots: the Dunkl
// difference quotient, lambda_kappa, and the normalized weight w_kappa.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/linalg.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

struct RootSystemSpec {
    int dim = 0;
    bool exact = true;
    std::vector<EVec> roots;                   // exact coordinates (when exact)
    std::vector<std::vector<double>> roots_d;  // always populated
    std::vector<Rational> kappa;               // per root, G-invariant, >= 0
    std::vector<std::size_t> positive;         // indices into roots
    std::string family = "custom";             // "z2" | "i2" | "custom"
    int m = 0;                                 // dihedral order parameter

    bool kappa_all_zero() const;
    Rational kappa_sum_positive() const;  // sum of kappa over R_+
    std::string label() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

struct ReflectionGroup {
    bool exact = true;
    std::vector<EMat> elements;                             // when exact
    std::vector<std::vector<std::vector<double>>> elements_d;  // always
    std::size_t order() const { return elements_d.size(); }
};

// sigma_v(x) = x - 2 <x,v>/<v,v> v
EVec reflect(const EVec& v, const EVec& x);
std::vector<double> reflect_d(const std::vector<double>& v, const std::vector<double>& x);
EMat reflection_matrix(const EVec& v);

RootSystemSpec build_z2(int d, const std::vector<Rational>& kappas);
// kappas: one value for odd m, two (even-index class, odd-index class) for even m.
RootSystemSpec build_i2(int m, const std::vector<Rational>& kappas);
// Explicit rational roots (one representative per +/- pair is fine; the
// negatives are added). kappa is per supplied root.
RootSystemSpec build_custom(int d, const std::vector<std::vector<Rational>>& roots,
                            const std::vector<Rational>& kappas);

ValidationReport validate(const RootSystemSpec& spec);

// Closure of the generating reflections; throws std::runtime_error if the
// order would exceed cap.
ReflectionGroup generate_group(const RootSystemSpec& spec, std::size_t cap = 1024);

// The same root system with -R_+ as the positive subsystem.
RootSystemSpec flip_positive(const RootSystemSpec& spec);

}  // namespace dunkl
