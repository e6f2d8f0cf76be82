#include "maxdet/verify.hpp"

#include <random>
#include <sstream>

#include "maxdet/border_form.hpp"
#include "maxdet/greedy_search.hpp"
#include "maxdet/reference_tables.hpp"

namespace maxdet {

namespace {

constexpr long kIdentityDefaultTrials = 1000;
constexpr long kEquivalenceDefaultTrials = 200;
constexpr int kRandomDimensionCap = 7;
constexpr std::size_t kFailureCap = 5;

// Deterministic draws: raw engine output only, no distribution objects, so a
// seed reproduces the same instances everywhere.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t m) { return rng_() % m; }
    std::uint8_t bit() { return static_cast<std::uint8_t>(rng_() & 1); }

    BinaryMatrix matrix(int n) {
        BinaryMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, bit());
        return m;
    }

    BorderAssignment assignment(int n, bool random_z) {
        BorderAssignment asg;
        asg.x.resize(n);
        asg.y.resize(n);
        for (int i = 0; i < n; ++i) {
            asg.x[i] = bit();
            asg.y[i] = bit();
        }
        asg.z = random_z ? bit() : 1;
        return asg;
    }

private:
    std::mt19937_64 rng_;
};

std::string join_rows(const std::vector<std::string>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += rows[i];
    }
    return out;
}

std::string bits_string(const std::vector<std::uint8_t>& bits) {
    std::string out(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = static_cast<char>('0' + bits[i]);
    return out;
}

std::string describe_instance(const BinaryMatrix& a, const BorderAssignment& asg) {
    std::ostringstream os;
    os << "rows=" << join_rows(a.row_strings()) << " x=" << bits_string(asg.x)
       << " y=" << bits_string(asg.y) << " z=" << int(asg.z);
    return os.str();
}

bool check_identity_case(const BinaryMatrix& a, const BorderAssignment& asg, VerifyResult& result,
                         const std::string& label) {
    ++result.checks;
    const std::int64_t direct = bordered_det(a, asg);
    const std::int64_t via_form = eval_border_form(build_border_form(a), asg);
    if (direct == via_form) return true;
    if (result.failures.size() < kFailureCap) {
        std::ostringstream os;
        os << label << " " << describe_instance(a, asg) << " bordered_det=" << direct
           << " eval_border_form=" << via_form;
        result.failures.push_back(os.str());
    }
    return false;
}

}  // namespace

VerifyResult verify_identity(const VerifyOptions& opts) {
    VerifyResult result{"identity", false, 0, {}};
    const long trials = opts.trials > 0 ? opts.trials : kIdentityDefaultTrials;

    // Exhaustive slab: every matrix and assignment for n <= 2.
    for (int n = 1; n <= 2; ++n) {
        const int cells = n * n;
        for (std::uint64_t mbits = 0; mbits < (std::uint64_t{1} << cells); ++mbits) {
            BinaryMatrix a(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a.set(i, j, (mbits >> (i * n + j)) & 1);
            for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << n); ++xb)
                for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << n); ++yb)
                    for (std::uint8_t z = 0; z <= 1; ++z)
                        check_identity_case(a, BorderAssignment::from_bits(xb, yb, n, z), result,
                                            "exhaustive");
        }
    }

    DetRng rng(opts.seed);
    for (long t = 0; t < trials; ++t) {
        const int n = 1 + static_cast<int>(rng.below(kRandomDimensionCap));
        const BinaryMatrix a = rng.matrix(n);
        const BorderAssignment asg = rng.assignment(n, /*random_z=*/true);
        check_identity_case(a, asg, result, "trial=" + std::to_string(t) +
                                                " seed=" + std::to_string(opts.seed));
    }
    result.passed = result.failures.empty();
    return result;
}

VerifyResult verify_equivalence(const VerifyOptions& opts) {
    VerifyResult result{"equivalence", false, 0, {}};
    const long trials = opts.trials > 0 ? opts.trials : kEquivalenceDefaultTrials;

    DetRng rng(opts.seed);
    for (long t = 0; t < trials; ++t) {
        const int n = 1 + static_cast<int>(rng.below(kRandomDimensionCap));
        const BinaryMatrix a = rng.matrix(n);
        const BorderForm form = build_border_form(a);
        ++result.checks;
        const MaxResult slow = maximize_exhaustive(form);
        const MaxResult fast = maximize_fast(form, {TieBreakPolicy::kPaperLex, opts.threads});
        if (slow.value == fast.value && slow.chosen == fast.chosen &&
            slow.tie_count == fast.tie_count)
            continue;
        if (result.failures.size() < kFailureCap) {
            std::ostringstream os;
            os << "trial=" << t << " seed=" << opts.seed << " rows=" << join_rows(a.row_strings())
               << " exhaustive(value=" << slow.value << ",x=" << bits_string(slow.chosen.x)
               << ",y=" << bits_string(slow.chosen.y) << ",ties=" << slow.tie_count << ")"
               << " fast(value=" << fast.value << ",x=" << bits_string(fast.chosen.x)
               << ",y=" << bits_string(fast.chosen.y) << ",ties=" << fast.tie_count << ")";
            result.failures.push_back(os.str());
        }
    }
    result.passed = result.failures.empty();
    return result;
}

VerifyResult verify_tables(const VerifyOptions&) {
    VerifyResult result{"tables", false, 0, {}};
    const auto b = b_table();
    const auto d = d_table();
    auto fail = [&result](const std::string& msg) {
        if (result.failures.size() < kFailureCap) result.failures.push_back(msg);
    };

    ++result.checks;
    if (b.size() != kTableMax || d.size() != kTableMax) fail("table length is not 15");
    for (int n = 1; n <= kTableMax; ++n) {
        ++result.checks;
        if (b[n - 1].n != n || d[n - 1].n != n) fail("table index mismatch at n=" + std::to_string(n));
        if (b_value(n) > d_value(n))
            fail("b > d at n=" + std::to_string(n) + ": " + std::to_string(b_value(n)) + " > " +
                 std::to_string(d_value(n)));
        if (n > 1) {
            if (b_value(n) < b_value(n - 1)) fail("b decreases at n=" + std::to_string(n));
            if (d_value(n) < d_value(n - 1)) fail("d decreases at n=" + std::to_string(n));
        }
    }
    result.passed = result.failures.empty();
    return result;
}

std::vector<VerifyResult> verify_all(const VerifyOptions& opts) {
    return {verify_identity(opts), verify_equivalence(opts), verify_tables(opts)};
}

}  // namespace maxdet
