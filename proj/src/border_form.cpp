#include "maxdet/border_form.hpp"

#include <string>

#include "maxdet/checked_int.hpp"
#include "maxdet/exact_linalg.hpp"

namespace maxdet {

namespace {

void require_matching(const BorderForm& f, const BorderAssignment& asg) {
    if (asg.size() != f.n || asg.y.size() != asg.x.size())
        throw DimensionError("border assignment dimension does not match form (n=" +
                             std::to_string(f.n) + ")");
}

void require_bits(const BorderAssignment& asg) {
    for (std::uint8_t v : asg.x)
        if (v > 1) throw InputError("border x component out of {0,1}");
    for (std::uint8_t v : asg.y)
        if (v > 1) throw InputError("border y component out of {0,1}");
    if (asg.z > 1) throw InputError("border z out of {0,1}");
}

}  // namespace

BorderAssignment BorderAssignment::from_bits(std::uint64_t xbits, std::uint64_t ybits, int n,
                                             std::uint8_t z) {
    BorderAssignment asg;
    asg.x.resize(n);
    asg.y.resize(n);
    asg.z = z;
    for (int i = 0; i < n; ++i) {
        asg.x[i] = static_cast<std::uint8_t>((xbits >> i) & 1);
        asg.y[i] = static_cast<std::uint8_t>((ybits >> i) & 1);
    }
    return asg;
}

BorderForm build_border_form(const BinaryMatrix& a) {
    const int n = a.size();
    IntMatrix adj = adjugate(a.to_int());
    IntMatrix coeffs(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) coeffs.set(i, j, checked_neg(adj.at(i, j)));
    return {n, det_bareiss(a), std::move(coeffs)};
}

std::int64_t eval_border_form(const BorderForm& f, const BorderAssignment& asg) {
    require_matching(f, asg);
    require_bits(asg);
    std::int64_t acc = asg.z ? f.base_det : 0;
    for (int i = 0; i < f.n; ++i) {
        if (!asg.x[i]) continue;
        for (int j = 0; j < f.n; ++j)
            if (asg.y[j]) acc = checked_add(acc, f.coeffs.at(i, j));
    }
    return acc;
}

BinaryMatrix bordered(const BinaryMatrix& a, const BorderAssignment& asg) {
    const int n = a.size();
    if (asg.size() != n || asg.y.size() != asg.x.size())
        throw DimensionError("border assignment dimension does not match matrix (n=" +
                             std::to_string(n) + ")");
    require_bits(asg);
    BinaryMatrix out(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.set(i, j, a.at(i, j));
        out.set(i, n, asg.y[i]);
    }
    for (int j = 0; j < n; ++j) out.set(n, j, asg.x[j]);
    out.set(n, n, asg.z);
    return out;
}

std::int64_t bordered_det(const BinaryMatrix& a, const BorderAssignment& asg) {
    return det_bareiss(bordered(a, asg));
}

}  // namespace maxdet
