#include "dunkl/linalg.hpp"

#include <stdexcept>

namespace dunkl {

EMat emat_zero(std::size_t rows, std::size_t cols) {
    return EMat(rows, EVec(cols, ExactReal(0)));
}

EMat emat_identity(std::size_t n) {
    EMat m = emat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = ExactReal(1);
    return m;
}

EMat emat_mul(const EMat& a, const EMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k) throw std::invalid_argument("matrix shape mismatch");
    EMat c = emat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            if (a[i][p].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[p][j].is_zero()) continue;
                c[i][j] += a[i][p] * b[p][j];
            }
        }
    return c;
}

EVec emat_apply(const EMat& a, const EVec& x) {
    EVec y(a.size(), ExactReal(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
    }
    return y;
}

bool emat_equal(const EMat& a, const EMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

// Row-reduce [a | b] in place; returns pivot column per pivot row.
std::vector<std::size_t> eliminate(EMat& a, EMat& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (!b.empty()) std::swap(b[p], b[r]);
        ExactReal inv = ExactReal(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        if (!b.empty())
            for (auto& v : b[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            ExactReal f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (!b.empty())
                for (std::size_t j = 0; j < b[i].size(); ++j) b[i][j] -= f * b[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

EMat solve_full_column_rank(EMat a, EMat b) {
    if (a.empty()) throw std::invalid_argument("empty system");
    std::size_t rows = a.size(), cols = a[0].size();
    if (b.size() != rows) throw std::invalid_argument("rhs row count mismatch");
    std::size_t k = b.empty() ? 0 : b[0].size();
    auto pivots = eliminate(a, b);
    if (pivots.size() != cols)
        throw std::logic_error("system is rank-deficient");
    // Rows beyond the pivots must have vanished entirely.
    for (std::size_t i = cols; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!b[i][j].is_zero()) throw std::logic_error("inconsistent overdetermined system");
    EMat x = emat_zero(cols, k);
    for (std::size_t r = 0; r < cols; ++r)
        x[pivots[r]] = b[r];
    return x;
}

EMat nullspace(EMat a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    EMat dummy;
    auto pivots = eliminate(a, dummy);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    EMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        EVec v(cols, ExactReal(0));
        v[f] = ExactReal(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(EMat a) {
    EMat dummy;
    return eliminate(a, dummy).size();
}

}  // namespace dunkl
