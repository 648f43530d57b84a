// Exact dense linear algebra over ExactReal: elimination, consistent solves,
// nullspaces. Sizes here are small (dim P_n^d), so plain Gaussian
// elimination with exact arithmetic is the right tool.
#pragma once

#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

using EVec = std::vector<ExactReal>;
using EMat = std::vector<EVec>;

EMat emat_zero(std::size_t rows, std::size_t cols);
EMat emat_identity(std::size_t n);
EMat emat_mul(const EMat& a, const EMat& b);
EVec emat_apply(const EMat& a, const EVec& x);
bool emat_equal(const EMat& a, const EMat& b);

// Solves A X = B where A is (rows x cols) with full column rank and B is
// (rows x k). Extra rows must be consistent; throws std::logic_error on a
// rank-deficient or inconsistent system.
EMat solve_full_column_rank(EMat a, EMat b);

// Basis of the right nullspace of A, one vector per row of the result.
// Vectors follow the reduced-echelon free-variable pattern (entry 1 at the
// free column, zeros at the other free columns).
EMat nullspace(EMat a);

std::size_t rank(EMat a);

}  // namespace dunkl
