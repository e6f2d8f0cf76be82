#pragma once

#include <cstdint>
#include <vector>

#include "maxdet/matrix.hpp"

namespace maxdet {

// Appending one row (x, z) and one column (y, z) to a square 0/1 matrix a
// gives an (n+1)x(n+1) matrix whose determinant is affine in z and bilinear
// in (x, y):
//
//     det(bordered(a, x, y, z)) = z * det(a) + sum_ij coeffs[i][j] * x_i * y_j
//
// BorderForm captures the right-hand side so the maximization over the 4^n
// border assignments never re-evaluates an (n+1)x(n+1) determinant.

// The border vectors. z is the new corner entry; the growth procedure fixes
// z = 1 (with det(a) > 0 anything else is suboptimal).
struct BorderAssignment {
    std::vector<std::uint8_t> x;  // appended bottom row
    std::vector<std::uint8_t> y;  // appended right column
    std::uint8_t z = 1;

    // Assignment of the low n bits of xbits/ybits: component i = bit i.
    static BorderAssignment from_bits(std::uint64_t xbits, std::uint64_t ybits, int n,
                                      std::uint8_t z = 1);

    int size() const { return static_cast<int>(x.size()); }
    bool operator==(const BorderAssignment&) const = default;
};

struct BorderForm {
    int n = 0;
    std::int64_t base_det = 0;
    IntMatrix coeffs;  // n x n; entry (i,j) multiplies x_i * y_j
};

// Builds the form for a base matrix (singular bases allowed; the identity is
// polynomial and holds regardless). The coefficients come out as the negated
// adjugate, but the contract is the evaluation identity, not that formula.
BorderForm build_border_form(const BinaryMatrix& a);

// z * base_det + x^T * coeffs * y, checked arithmetic throughout.
std::int64_t eval_border_form(const BorderForm& f, const BorderAssignment& asg);

// Assembles the bordered 0/1 matrix itself.
BinaryMatrix bordered(const BinaryMatrix& a, const BorderAssignment& asg);

// Direct route: assemble the bordered matrix and take its determinant.
// The evaluation identity against eval_border_form is the module's core test.
std::int64_t bordered_det(const BinaryMatrix& a, const BorderAssignment& asg);

}  // namespace maxdet
