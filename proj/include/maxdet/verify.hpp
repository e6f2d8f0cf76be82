#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxdet {

// Seeded property suites behind the `verify` CLI command. Failures carry
// enough reproduction data to replay the counterexample by hand.

struct VerifyOptions {
    std::uint64_t seed = 0;
    long trials = 0;  // 0 = suite default (identity 1000, equivalence 200)
    int threads = 1;
};

struct VerifyResult {
    std::string suite;
    bool passed = false;
    long checks = 0;
    std::vector<std::string> failures;  // reproduction data, empty on pass
};

// eval_border_form(build_border_form(a), asg) == bordered_det(a, asg):
// exhaustive over all matrices and assignments for n <= 2 (z in {0,1} too),
// then seeded random instances with n <= 7, singular bases included.
VerifyResult verify_identity(const VerifyOptions& opts = {});

// maximize_fast == maximize_exhaustive on (value, chosen, tie_count) for
// seeded random 0/1 bases with n <= 7.
VerifyResult verify_equivalence(const VerifyOptions& opts = {});

// Embedded reference tables: expected lengths, b_n <= d_n throughout, and
// both sequences nondecreasing.
VerifyResult verify_tables(const VerifyOptions& opts = {});

std::vector<VerifyResult> verify_all(const VerifyOptions& opts = {});

}  // namespace maxdet
