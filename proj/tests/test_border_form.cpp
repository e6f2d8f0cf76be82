#include <doctest.h>

#include <random>

#include "maxdet/border_form.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/reference_tables.hpp"

using namespace maxdet;

namespace {

BinaryMatrix random_binary(std::mt19937_64& rng, int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, rng() & 1);
    return m;
}

BorderAssignment random_assignment(std::mt19937_64& rng, int n) {
    return BorderAssignment::from_bits(rng(), rng(), n, static_cast<std::uint8_t>(rng() & 1));
}

// Max of the bilinear-plus-z form over all 4^n assignments at a fixed z,
// straight evaluation.
std::int64_t exhaustive_max_at_z(const BorderForm& f, std::uint8_t z) {
    std::int64_t best = INT64_MIN;
    for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << f.n); ++xb)
        for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << f.n); ++yb) {
            const std::int64_t v =
                eval_border_form(f, BorderAssignment::from_bits(xb, yb, f.n, z));
            if (v > best) best = v;
        }
    return best;
}

}  // namespace

TEST_CASE("border form of the 1x1 unit matrix") {
    const BorderForm f = build_border_form(seed_a1());
    CHECK(f.n == 1);
    CHECK(f.base_det == 1);
    CHECK(f.coeffs == IntMatrix(1, {-1}));  // det((1,y),(x,1)) = 1 - x*y
    CHECK(eval_border_form(f, {{1}, {1}, 1}) == 0);
    CHECK(eval_border_form(f, {{0}, {0}, 1}) == 1);
}

TEST_CASE("border form of the second seed") {
    const BorderForm f = build_border_form(seed_a2());
    CHECK(f.base_det == 1);
    CHECK(f.coeffs == IntMatrix(2, {-1, 0, 1, -1}));
    // Cross-check against direct bordered determinants on every assignment.
    for (std::uint64_t xb = 0; xb < 4; ++xb)
        for (std::uint64_t yb = 0; yb < 4; ++yb)
            for (std::uint8_t z = 0; z <= 1; ++z) {
                const BorderAssignment asg = BorderAssignment::from_bits(xb, yb, 2, z);
                CHECK(eval_border_form(f, asg) == bordered_det(seed_a2(), asg));
            }
}

TEST_CASE("bordering the second seed yields the third") {
    const BorderAssignment asg{{0, 1}, {1, 0}, 1};
    CHECK(bordered_det(seed_a2(), asg) == 2);
    CHECK(bordered(seed_a2(), asg) == seed_a3());
    CHECK(eval_border_form(build_border_form(seed_a2()), asg) == 2);

    // Zero border: block-triangular, determinant unchanged.
    CHECK(bordered_det(seed_a2(), {{0, 0}, {0, 0}, 1}) == 1);
}

TEST_CASE("evaluation identity, exhaustive for n <= 2") {
    for (int n = 1; n <= 2; ++n) {
        const int cells = n * n;
        for (std::uint64_t mbits = 0; mbits < (std::uint64_t{1} << cells); ++mbits) {
            BinaryMatrix a(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a.set(i, j, (mbits >> (i * n + j)) & 1);
            const BorderForm f = build_border_form(a);
            for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << n); ++xb)
                for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << n); ++yb)
                    for (std::uint8_t z = 0; z <= 1; ++z) {
                        const BorderAssignment asg = BorderAssignment::from_bits(xb, yb, n, z);
                        REQUIRE(eval_border_form(f, asg) == bordered_det(a, asg));
                    }
        }
    }
}

TEST_CASE("evaluation identity, randomized n <= 7 including singular bases") {
    std::mt19937_64 rng(1111);
    int singular_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const BinaryMatrix a = random_binary(rng, n);
        const BorderForm f = build_border_form(a);
        if (f.base_det == 0) ++singular_seen;
        const BorderAssignment asg = random_assignment(rng, n);
        CAPTURE(trial);
        REQUIRE(eval_border_form(f, asg) == bordered_det(a, asg));
    }
    CHECK(singular_seen > 0);  // the sample genuinely covers singular bases
}

TEST_CASE("corner choice: z = 1 beats z = 0 by exactly the base determinant") {
    std::mt19937_64 rng(2222);
    int positive_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const BinaryMatrix a = random_binary(rng, n);
        const BorderForm f = build_border_form(a);
        const std::int64_t at_one = exhaustive_max_at_z(f, 1);
        const std::int64_t at_zero = exhaustive_max_at_z(f, 0);
        CHECK(at_one == at_zero + f.base_det);  // bilinear part is independent of z
        if (f.base_det > 0) {
            ++positive_seen;
            CHECK(at_one > at_zero);
        }
        CHECK(at_zero >= 0);  // x = 0 attains 0 in the bilinear part
    }
    CHECK(positive_seen > 0);
}

TEST_CASE("x = y = 0 always evaluates to the base determinant") {
    std::mt19937_64 rng(3333);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const BinaryMatrix a = random_binary(rng, n);
        const BorderForm f = build_border_form(a);
        CHECK(eval_border_form(f, BorderAssignment::from_bits(0, 0, n, 1)) == f.base_det);
    }
}

TEST_CASE("border errors") {
    const BorderForm f = build_border_form(seed_a2());
    CHECK_THROWS_AS(eval_border_form(f, BorderAssignment::from_bits(0, 0, 3, 1)), DimensionError);
    CHECK_THROWS_AS(bordered(seed_a2(), BorderAssignment::from_bits(0, 0, 1, 1)), DimensionError);
    BorderAssignment bad{{2, 0}, {0, 0}, 1};
    CHECK_THROWS_AS(eval_border_form(f, bad), InputError);
    CHECK_THROWS_AS(bordered(seed_a2(), bad), InputError);
}
