#include <doctest.h>

#include <random>

#include "maxdet/checked_int.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/exact_linalg.hpp"
#include "maxdet/exact_linalg_wide.hpp"
#include "maxdet/reference_tables.hpp"

using namespace maxdet;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, int n, int span) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, static_cast<std::int64_t>(rng() % (2 * span + 1)) - span);
    return m;
}

IntMatrix random_01_matrix(std::mt19937_64& rng, int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, rng() & 1);
    return m;
}

}  // namespace

TEST_CASE("checked arithmetic detects overflow") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
    CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), OverflowError);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), OverflowError);
    CHECK(exact_div(-6, 3) == -2);
}

TEST_CASE("determinants of the seed matrices") {
    CHECK(det_bareiss(seed_a1()) == 1);
    CHECK(det_bareiss(seed_a2()) == 1);
    CHECK(det_bareiss(seed_a3()) == 2);
    CHECK(det_cofactor(seed_a2().to_int()) == 1);
    CHECK(det_cofactor(seed_a3().to_int()) == 2);
}

TEST_CASE("determinant basics") {
    CHECK(det_bareiss(IntMatrix(1, {1})) == 1);
    CHECK(det_bareiss(IntMatrix(1, {-7})) == -7);
    CHECK(det_cofactor(IntMatrix(3)) == 0);  // zero matrix
    CHECK(det_bareiss(IntMatrix::identity(4)) == 1);

    // Pivoting: zero leading entry forces a tracked row swap.
    CHECK(det_bareiss(IntMatrix(2, {0, 1, 1, 0})) == -1);
    // Fully zero column short-circuits.
    CHECK(det_bareiss(IntMatrix(2, {0, 3, 0, 4})) == 0);
    // Zero pivot appearing mid-elimination.
    CHECK(det_bareiss(IntMatrix(3, {1, 1, 0, 1, 1, 1, 0, 1, 1})) == -1);
}

TEST_CASE("cofactor expansion refuses large dimensions") {
    CHECK_THROWS_AS(det_cofactor(IntMatrix(9)), SizeGuardError);
    CHECK_NOTHROW(det_cofactor(IntMatrix(8)));
}

TEST_CASE("elimination and cofactor expansion agree") {
    std::mt19937_64 rng(20240801);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
        const IntMatrix m = random_01_matrix(rng, n);
        CAPTURE(trial);
        REQUIRE(det_bareiss(m) == det_cofactor(m));
    }
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);  // 1..6
        const IntMatrix m = random_int_matrix(rng, n, 9);
        CAPTURE(trial);
        REQUIRE(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant is zero on equal rows and invariant under transpose") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        IntMatrix m = random_int_matrix(rng, n, 9);
        CHECK(det_bareiss(m) == det_bareiss(m.transposed()));

        const int src = static_cast<int>(rng() % n);
        int dst = static_cast<int>(rng() % n);
        if (dst == src) dst = (dst + 1) % n;
        for (int j = 0; j < n; ++j) m.set(dst, j, m.at(src, j));
        CHECK(det_bareiss(m) == 0);
    }
}

TEST_CASE("adjugate basics") {
    CHECK(adjugate(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK(adjugate(IntMatrix(1, {5})) == IntMatrix(1, {1}));
    // 2x2 cofactor formula on the second seed.
    CHECK(adjugate(seed_a2().to_int()) == IntMatrix(2, {1, 0, -1, 1}));
}

TEST_CASE("adjugate satisfies the defining identity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);  // 1..4
        const IntMatrix m = random_int_matrix(rng, n, 9);
        const IntMatrix adj = adjugate(m);
        const std::int64_t det = det_bareiss(m);
        IntMatrix scaled = IntMatrix(n);
        for (int i = 0; i < n; ++i) scaled.set(i, i, det);
        CHECK(m.multiplied_by(adj) == scaled);
        CHECK(adj.multiplied_by(m) == scaled);
    }
}

TEST_CASE("64-bit engine reports overflow instead of wrapping") {
    const std::int64_t big = std::int64_t{1} << 32;
    IntMatrix m(3);
    for (int i = 0; i < 3; ++i) m.set(i, i, big);
    CHECK_THROWS_AS(det_bareiss(m), OverflowError);
}

TEST_CASE("wide engine agrees with the checked engine and goes past it") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const IntMatrix m = random_int_matrix(rng, n, 9);
        CHECK(det_bareiss_wide(m) == WideInt(det_bareiss(m)));
        if (n <= 4) CHECK(det_cofactor_wide(m) == WideInt(det_cofactor(m)));
    }

    // det = (2^13)^5 = 2^65: beyond 64-bit, exact in the wide engine.
    IntMatrix m(5);
    for (int i = 0; i < 5; ++i) m.set(i, i, std::int64_t{1} << 13);
    CHECK_THROWS_AS(det_bareiss(m), OverflowError);
    CHECK(det_bareiss_wide(m) == WideInt(1) << 65);

    const IntMatrix a3 = seed_a3().to_int();
    const WideMatrix wide_adj = adjugate_wide(a3);
    const IntMatrix adj = adjugate(a3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(wide_adj.at(i, j) == WideInt(adj.at(i, j)));
}

TEST_CASE("matrix construction validates input") {
    CHECK_THROWS_AS(BinaryMatrix(0), DimensionError);
    CHECK_THROWS_AS(BinaryMatrix(2, {0, 1, 1}), DimensionError);
    CHECK_THROWS_AS(BinaryMatrix(1, {2}), InputError);
    CHECK_THROWS_AS(BinaryMatrix::from_rows({"01", "0"}), InputError);
    CHECK_THROWS_AS(BinaryMatrix::from_rows({"0x", "01"}), InputError);
    CHECK(BinaryMatrix::from_rows({"10", "11"}) == seed_a2());
}
