#include "maxdet/exact_linalg_wide.hpp"

#include <string>

#include "maxdet/errors.hpp"
#include "maxdet/exact_linalg.hpp"

namespace maxdet {

namespace {

std::vector<WideInt> to_wide(const IntMatrix& m) {
    const auto& e = m.entries();
    return {e.begin(), e.end()};
}

}  // namespace

WideInt det_bareiss_wide(const IntMatrix& m) {
    std::vector<WideInt> buf = to_wide(m);
    return det_bareiss_generic(buf, m.size());
}

WideInt det_cofactor_wide(const IntMatrix& m) {
    if (m.size() > kCofactorDimensionGuard)
        throw SizeGuardError("det_cofactor_wide refuses n=" + std::to_string(m.size()) +
                             " (guard n <= " + std::to_string(kCofactorDimensionGuard) + ")");
    std::vector<WideInt> buf = to_wide(m);
    return det_cofactor_generic(buf, m.size());
}

WideMatrix adjugate_wide(const IntMatrix& m) {
    std::vector<WideInt> buf = to_wide(m);
    return {m.size(), adjugate_generic(buf, m.size())};
}

}  // namespace maxdet
