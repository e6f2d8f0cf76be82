#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxdet/errors.hpp"
#include "maxdet/matrix.hpp"

namespace maxdet {

// Exact integer determinants and adjugates for small dense matrices.
//
// Two independent determinant routes are exposed on purpose: fraction-free
// elimination (the production engine) and recursive cofactor expansion (the
// reference oracle, guarded to small n). They cross-check each other in the
// test suites. The generic templates underneath run over any exact integer
// scalar; the default wrappers use checked 64-bit, and exact_linalg_wide.hpp
// instantiates the same algorithms over an arbitrary-precision integer.

// Fraction-free elimination on a row-major n*n buffer, destroying it.
// First nonzero pivot in column order; row swaps tracked by sign; a fully
// zero column short-circuits to 0. Every division is exact.
template <class Int>
Int det_bareiss_generic(std::vector<Int>& a, int n) {
    auto cell = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
    const Int zero = 0;
    Int prev = 1;
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (cell(k, k) == zero) {
            int pivot_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!(cell(r, k) == zero)) { pivot_row = r; break; }
            if (pivot_row < 0) return zero;
            for (int j = k; j < n; ++j) std::swap(cell(k, j), cell(pivot_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                cell(i, j) = (cell(i, j) * cell(k, k) - cell(i, k) * cell(k, j)) / prev;
            cell(i, k) = zero;
        }
        prev = cell(k, k);
    }
    Int det = cell(n - 1, n - 1);
    return negate ? -det : det;
}

// Recursive cofactor expansion along the first row. Factorial cost; callers
// guard the dimension.
template <class Int>
Int det_cofactor_generic(const std::vector<Int>& a, int n) {
    if (n == 1) return a[0];
    const Int zero = 0;
    Int det = 0;
    std::vector<Int> minor(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int j = 0; j < n; ++j) {
        if (a[j] == zero) continue;
        std::size_t m = 0;
        for (int i = 1; i < n; ++i)
            for (int c = 0; c < n; ++c)
                if (c != j) minor[m++] = a[static_cast<std::size_t>(i) * n + c];
        Int term = a[j] * det_cofactor_generic(minor, n - 1);
        if (j % 2 == 0)
            det = det + term;
        else
            det = det - term;
    }
    return det;
}

// adj(a) with a * adj(a) = adj(a) * a = det(a) * I. Transpose of the cofactor
// matrix; each cofactor computed by fraction-free elimination on the minor.
// adj of a 1x1 matrix is ((1)).
template <class Int>
std::vector<Int> adjugate_generic(const std::vector<Int>& a, int n) {
    std::vector<Int> adj(static_cast<std::size_t>(n) * n);
    if (n == 1) {
        adj[0] = 1;
        return adj;
    }
    std::vector<Int> minor(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::size_t m = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0; c < n; ++c)
                    if (c != j) minor[m++] = a[static_cast<std::size_t>(r) * n + c];
            }
            Int cof = det_bareiss_generic(minor, n - 1);
            if ((i + j) % 2 != 0) cof = -cof;
            adj[static_cast<std::size_t>(j) * n + i] = cof;
        }
    return adj;
}

// Checked 64-bit wrappers. Overflow raises OverflowError.
std::int64_t det_bareiss(const IntMatrix& m);
std::int64_t det_bareiss(const BinaryMatrix& m);

// Reference oracle; refuses n > 8.
inline constexpr int kCofactorDimensionGuard = 8;
std::int64_t det_cofactor(const IntMatrix& m);

IntMatrix adjugate(const IntMatrix& m);

}  // namespace maxdet
