#include <doctest.h>

#include <random>

#include "maxdet/errors.hpp"
#include "maxdet/greedy_search.hpp"
#include "maxdet/reference_tables.hpp"

using namespace maxdet;

namespace {

BinaryMatrix random_binary(std::mt19937_64& rng, int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, rng() & 1);
    return m;
}

bool same_result(const MaxResult& a, const MaxResult& b) {
    return a.value == b.value && a.chosen == b.chosen && a.tie_count == b.tie_count;
}

}  // namespace

TEST_CASE("tie-break key matches the enumeration order") {
    // (x_2, y_2, x_1, y_1), 0 before 1, x outer / y inner: counting in that
    // order must produce ascending keys.
    std::uint64_t expected = 0;
    for (std::uint8_t x2 = 0; x2 <= 1; ++x2)
        for (std::uint8_t y2 = 0; y2 <= 1; ++y2)
            for (std::uint8_t x1 = 0; x1 <= 1; ++x1)
                for (std::uint8_t y1 = 0; y1 <= 1; ++y1) {
                    const BorderAssignment asg{{x1, x2}, {y1, y2}, 1};
                    CHECK(paper_lex_key(asg) == expected);
                    ++expected;
                }
    CHECK(paper_lex_key({{0, 1, 0}, {1, 0, 0}, 1}) == 9);
}

TEST_CASE("maximizing the unit seed's form") {
    const BorderForm f = build_border_form(seed_a1());
    for (const MaxResult& r : {maximize_exhaustive(f), maximize_fast(f)}) {
        CHECK(r.value == 1);
        CHECK(r.tie_count == 3);  // the assignments with x*y = 0
        CHECK(r.chosen == BorderAssignment{{0}, {0}, 1});
    }
}

TEST_CASE("maximizing the second seed's form") {
    const BorderForm f = build_border_form(seed_a2());
    const MaxResult r = maximize_exhaustive(f);
    CHECK(r.value == 2);
    CHECK(r.tie_count == 1);
    CHECK(r.chosen == BorderAssignment{{0, 1}, {1, 0}, 1});
    CHECK(same_result(r, maximize_fast(f)));
}

TEST_CASE("maximizing the third seed's form") {
    const BorderForm f = build_border_form(seed_a3());
    const MaxResult r = maximize_fast(f);
    CHECK(r.value == 3);
    CHECK(r.tie_count == 3);
    CHECK(r.chosen == BorderAssignment{{0, 1, 0}, {1, 0, 0}, 1});
    CHECK(same_result(r, maximize_exhaustive(f)));
}

TEST_CASE("maximizing the 2x2 identity's form") {
    const BorderForm f = build_border_form(BinaryMatrix::from_rows({"10", "01"}));
    const MaxResult r = maximize_fast(f);
    CHECK(r.value == 1);  // 1 - x1*y1 - x2*y2 cannot exceed the base
    CHECK(r.tie_count == 9);
    CHECK(r.chosen == BorderAssignment{{0, 0}, {0, 0}, 1});
    CHECK(same_result(r, maximize_exhaustive(f)));
}

TEST_CASE("fast equals exhaustive on random bases") {
    std::mt19937_64 rng(515151);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const BorderForm f = build_border_form(random_binary(rng, n));
        CAPTURE(trial);
        REQUIRE(same_result(maximize_exhaustive(f), maximize_fast(f)));
    }
}

TEST_CASE("sampled assignments never beat the reported maximum") {
    std::mt19937_64 rng(616161);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const BorderForm f = build_border_form(random_binary(rng, n));
        const MaxResult r = maximize_fast(f);
        CHECK(r.value == eval_border_form(f, r.chosen));
        CHECK(r.value >= f.base_det);  // x = y = 0 is always available
        for (int s = 0; s < 500; ++s) {
            const BorderAssignment asg = BorderAssignment::from_bits(rng(), rng(), n, 1);
            REQUIRE(eval_border_form(f, asg) <= r.value);
        }
    }
}

TEST_CASE("thread count does not change the result") {
    std::mt19937_64 rng(717171);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const BorderForm f = build_border_form(random_binary(rng, n));
        const MaxResult base = maximize_fast(f, {TieBreakPolicy::kPaperLex, 1});
        for (int threads : {2, 3, 8}) {
            CAPTURE(trial);
            CAPTURE(threads);
            REQUIRE(same_result(base, maximize_fast(f, {TieBreakPolicy::kPaperLex, threads})));
        }
    }

    // Degenerate form: every assignment ties; tie counting must still merge
    // exactly across chunk boundaries.
    BorderForm flat{3, 1, IntMatrix(3)};
    for (int threads : {1, 2, 3, 8}) {
        const MaxResult r = maximize_fast(flat, {TieBreakPolicy::kPaperLex, threads});
        CHECK(r.value == 1);
        CHECK(r.tie_count == 64);  // all 4^3 assignments
        CHECK(r.chosen == BorderAssignment::from_bits(0, 0, 3, 1));
    }
}

TEST_CASE("maximizer enumeration") {
    const BorderForm f1 = build_border_form(seed_a1());
    const MaximizerList all = enumerate_maximizers(f1, 10);
    CHECK(all.total == 3);
    REQUIRE(all.assignments.size() == 3);
    CHECK(all.assignments[0] == BorderAssignment{{0}, {0}, 1});
    CHECK(all.assignments[1] == BorderAssignment{{0}, {1}, 1});
    CHECK(all.assignments[2] == BorderAssignment{{1}, {0}, 1});

    const MaximizerList capped = enumerate_maximizers(f1, 2);
    CHECK(capped.total == 3);  // total reported even when truncated
    CHECK(capped.assignments.size() == 2);

    const BorderForm f2 = build_border_form(seed_a2());
    const MaximizerList one = enumerate_maximizers(f2, 1);
    REQUIRE(one.assignments.size() == 1);
    CHECK(eval_border_form(f2, one.assignments.front()) == 2);

    const BorderForm f3 = build_border_form(seed_a3());
    const MaximizerList third = enumerate_maximizers(f3, 1000000);
    CHECK(third.total == 3);
    for (const BorderAssignment& asg : third.assignments) CHECK(eval_border_form(f3, asg) == 3);
    // Paper-lex ascending order.
    for (std::size_t i = 1; i < third.assignments.size(); ++i)
        CHECK(paper_lex_key(third.assignments[i - 1]) < paper_lex_key(third.assignments[i]));
}

TEST_CASE("report-all collects the capped maximizer list") {
    const BorderForm f = build_border_form(seed_a3());
    SearchOptions opts;
    opts.policy = TieBreakPolicy::kReportAll;
    opts.maximizer_cap = 2;
    for (const MaxResult& r : {maximize_exhaustive(f, opts), maximize_fast(f, opts)}) {
        CHECK(r.tie_count == 3);
        REQUIRE(r.maximizers.size() == 2);  // min(tie_count, cap)
        CHECK(r.maximizers.front() == r.chosen);
        for (const BorderAssignment& asg : r.maximizers) CHECK(eval_border_form(f, asg) == r.value);
    }
}

TEST_CASE("search guards") {
    CHECK_THROWS_AS(maximize_exhaustive(BorderForm{17, 1, IntMatrix(17)}), SizeGuardError);
    CHECK_THROWS_AS(maximize_fast(BorderForm{31, 1, IntMatrix(31)}), SizeGuardError);
    CHECK_THROWS_AS(enumerate_maximizers(BorderForm{31, 1, IntMatrix(31)}, 1), SizeGuardError);
    CHECK_THROWS_AS(maximize_fast(BorderForm{0, 1, IntMatrix(1)}), DimensionError);
    CHECK_THROWS_AS(maximize_fast(BorderForm{4, 1, IntMatrix(3)}), DimensionError);
}
