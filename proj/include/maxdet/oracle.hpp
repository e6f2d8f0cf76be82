#pragma once

#include <cstdint>
#include <vector>

#include "maxdet/matrix.hpp"

namespace maxdet {

// Brute-force ground truth at desk scale: d_n (maximal determinant over all
// n x n 0/1 matrices), M(n) (same over +-1 matrices), and the classical
// relation M(n) = 2^(n-1) * d_(n-1).
//
// Matrices are enumerated as n^2-bit integers in ascending order, bit
// (i*n + j) holding entry (i, j); the witness is the first matrix attaining
// the maximum. Enumeration may be sharded over contiguous index ranges; the
// merge keeps the lowest-index witness, so results are bit-identical for any
// worker count.

enum class EntryAlphabet {
    kZeroOne,    // entries in {0, 1}
    kPlusMinus,  // entries in {-1, +1}
};

struct OracleReport {
    int n = 0;
    std::int64_t value = 0;
    IntMatrix witness = IntMatrix(1);   // det(witness) == value
    EntryAlphabet alphabet = EntryAlphabet::kZeroOne;
    std::uint64_t search_space = 0;     // matrices enumerated
    double elapsed_seconds = 0.0;       // diagnostic only, never serialized
    bool normalized = false;            // +-1 search with first row/column fixed
};

struct OracleOptions {
    int threads = 1;
    bool force = false;      // accept n in (5, 7] despite the runtime
    bool normalize = true;   // +-1 search: fix first row/column to +1
};

inline constexpr int kOracleDefaultGuard = 5;
inline constexpr int kOracleForceGuard = 7;

// Maximum determinant over all 0/1 matrices; full 2^(n^2) enumeration.
OracleReport brute_dn(int n, const OracleOptions& opts = {});

// Maximum determinant over all +-1 matrices. With normalize, the first row
// and column are fixed to +1 (a 2^(2n-1)-fold reduction justified by the
// sign-flip invariance of |det|); the witness is sign-corrected so its
// determinant equals the reported value.
OracleReport brute_mn(int n, const OracleOptions& opts = {});

struct RelationReport {
    int n = 0;
    std::int64_t m_value = 0;   // M(n), brute force
    std::int64_t d_value = 0;   // d_(n-1), brute force
    std::int64_t lhs = 0;       // M(n)
    std::int64_t rhs = 0;       // 2^(n-1) * d_(n-1)
    bool holds = false;
};

// Verifies M(n) = 2^(n-1) * d_(n-1) with both oracles; 2 <= n <= 5.
RelationReport check_relation(int n, const OracleOptions& opts = {});

}  // namespace maxdet
