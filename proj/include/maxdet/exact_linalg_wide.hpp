#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxdet/matrix.hpp"

namespace maxdet {

// Arbitrary-precision engine: the same elimination algorithms instantiated
// over a bignum scalar, for dimensions past the reach of checked 64-bit.
// Kept in its own translation unit; include this header only where needed.

using WideInt = boost::multiprecision::cpp_int;

struct WideMatrix {
    int n;
    std::vector<WideInt> entries;  // row-major

    const WideInt& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

WideInt det_bareiss_wide(const IntMatrix& m);
WideInt det_cofactor_wide(const IntMatrix& m);  // same n <= 8 guard as the checked engine
WideMatrix adjugate_wide(const IntMatrix& m);

}  // namespace maxdet
