#include "maxdet/exact_linalg.hpp"

#include <string>

#include "maxdet/checked_int.hpp"

namespace maxdet {

namespace {

std::vector<Checked64> to_checked(const IntMatrix& m) {
    const auto& e = m.entries();
    return {e.begin(), e.end()};
}

}  // namespace

std::int64_t det_bareiss(const IntMatrix& m) {
    std::vector<Checked64> buf = to_checked(m);
    return det_bareiss_generic(buf, m.size()).v;
}

std::int64_t det_bareiss(const BinaryMatrix& m) { return det_bareiss(m.to_int()); }

std::int64_t det_cofactor(const IntMatrix& m) {
    if (m.size() > kCofactorDimensionGuard)
        throw SizeGuardError("det_cofactor refuses n=" + std::to_string(m.size()) +
                             " (guard n <= " + std::to_string(kCofactorDimensionGuard) + ")");
    std::vector<Checked64> buf = to_checked(m);
    return det_cofactor_generic(buf, m.size()).v;
}

IntMatrix adjugate(const IntMatrix& m) {
    std::vector<Checked64> buf = to_checked(m);
    std::vector<Checked64> adj = adjugate_generic(buf, m.size());
    std::vector<std::int64_t> out(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) out[i] = adj[i].v;
    return {m.size(), std::move(out)};
}

}  // namespace maxdet
