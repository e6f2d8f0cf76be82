#pragma once

#include <cstdint>
#include <span>

#include "maxdet/matrix.hpp"

namespace maxdet {

// Embedded reference data: the published b_n / d_n tables (n = 1..15), the
// canonical seed matrices, and the reference 15x15 endpoint of the canonical
// growth run. Every entry is tagged with where it came from; the oracle can
// recompute d_n at desk scale (n <= 5) and reports those as computed values.

enum class Provenance {
    kPublished,  // taken from the published tables, not verified here
    kComputed,   // produced by this program's own exhaustive search
};

struct TableEntry {
    int n;
    std::int64_t value;
    Provenance source;
    const char* note;  // nullptr when there is nothing to flag
};

// b_n: determinant sequence of the canonical greedy growth chain.
std::span<const TableEntry> b_table();

// d_n: maximal determinant over all n x n 0/1 matrices. The n = 15 entry is
// kept as published here even though other published tables give 131072; see
// its note. No check in this repository depends on it.
std::span<const TableEntry> d_table();

inline constexpr int kTableMax = 15;

std::int64_t b_value(int n);  // 1 <= n <= 15
std::int64_t d_value(int n);

// Canonical seeds: the 1x1 unit matrix and the small maximal-determinant
// matrices the growth procedure starts from.
const BinaryMatrix& seed_a1();
const BinaryMatrix& seed_a2();
const BinaryMatrix& seed_a3();

// Reference endpoint of the canonical run (seed a3, 12 growth steps,
// paper-lex tie-break). Used for the bit-exact reproduction check.
const BinaryMatrix& reference_a15();

}  // namespace maxdet
