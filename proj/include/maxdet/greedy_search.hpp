#pragma once

#include <cstdint>
#include <vector>

#include "maxdet/border_form.hpp"

namespace maxdet {

// Maximization of a border form over x, y in {0,1}^n with z = 1.
//
// Ties are resolved by a fixed total order on assignments ("paper-lex"):
// enumerate components (x_n, y_n, x_{n-1}, y_{n-1}, ..., x_1, y_1), each
// taking 0 before 1, x outer and y inner at each depth, and keep the first
// assignment attaining the maximum. Equivalently: the maximizer with the
// smallest interleaved key (see paper_lex_key). Every entry point is a pure
// function and returns bit-identical results for any thread count.

enum class TieBreakPolicy {
    kPaperLex,   // report the first maximizer only
    kReportAll,  // additionally collect maximizers (capped)
};

struct SearchOptions {
    TieBreakPolicy policy = TieBreakPolicy::kPaperLex;
    int threads = 1;
    std::size_t maximizer_cap = 64;  // list cap under kReportAll
};

struct MaxResult {
    std::int64_t value = 0;       // maximal determinant of the bordered matrix
    BorderAssignment chosen;      // paper-lex first maximizer, z = 1
    std::int64_t tie_count = 0;   // number of distinct maximizing (x, y) pairs
    std::vector<BorderAssignment> maximizers;  // filled under kReportAll, capped
};

struct MaximizerList {
    std::vector<BorderAssignment> assignments;  // paper-lex order, truncated at cap
    std::int64_t total = 0;                     // full tie count, even when truncated
};

inline constexpr int kExhaustiveDimensionGuard = 16;  // 4^n nodes
inline constexpr int kFastDimensionGuard = 30;        // 2^n pass-1 states

// Interleaved tie-break key: most significant pair (x_n, y_n), least
// significant (x_1, y_1); x above y within a pair. Ascending key order is
// exactly the enumeration order described above.
std::uint64_t paper_lex_key(const BorderAssignment& asg);

// Reference maximizer: walks all 4^n assignments in enumeration order with
// the strict-improvement rule. Sequential; guard n <= 16.
MaxResult maximize_exhaustive(const BorderForm& f, const SearchOptions& opts = {});

// Exact accelerated maximizer, identical result to maximize_exhaustive.
// Pass 1 scans y in Gray-code order, updating v = coeffs * y incrementally;
// the best bilinear value for a given y is sum_i max(0, v_i), and the number
// of optimal x for it is 2^(zeros of v). Pass 2 recovers the paper-lex first
// maximizer by depth-first search with an admissible positive-part bound.
// Pass 1 may be partitioned across threads; the merge is order-fixed.
MaxResult maximize_fast(const BorderForm& f, const SearchOptions& opts = {});

// All maximizing assignments (z = 1) in paper-lex order, truncated at cap.
MaximizerList enumerate_maximizers(const BorderForm& f, std::size_t cap, int threads = 1);

}  // namespace maxdet
