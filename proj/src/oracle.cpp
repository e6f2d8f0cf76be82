#include "maxdet/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <thread>

#include "maxdet/checked_int.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/exact_linalg.hpp"

namespace maxdet {

namespace {

void require_oracle_n(int n, bool force, const char* who) {
    if (n < 1) throw DimensionError(std::string(who) + ": n must be >= 1");
    const int guard = force ? kOracleForceGuard : kOracleDefaultGuard;
    if (n > guard)
        throw SizeGuardError(std::string(who) + " refuses n=" + std::to_string(n) + " (guard n <= " +
                             std::to_string(guard) + (force ? ", hard cap" : ", pass force to override") +
                             ")");
}

struct ShardResult {
    bool any = false;
    std::int64_t best = 0;
    std::uint64_t witness_index = 0;  // lowest enumeration index attaining best
};

// Best (objective, lowest index) over a contiguous index range. decode fills
// the scratch buffer with the matrix for one index; absolute switches the
// objective from det to |det|.
template <class Decode>
ShardResult scan_indices(std::uint64_t lo, std::uint64_t hi, int n, bool absolute, Decode decode) {
    ShardResult r;
    std::vector<Checked64> buf(static_cast<std::size_t>(n) * n);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        decode(idx, buf);
        std::int64_t det = det_bareiss_generic(buf, n).v;
        if (absolute && det < 0) det = checked_neg(det);
        if (!r.any || det > r.best) {
            r.any = true;
            r.best = det;
            r.witness_index = idx;
        }
    }
    return r;
}

template <class Decode>
ShardResult sharded_max(std::uint64_t total, int n, int threads, bool absolute, Decode decode) {
    const std::uint64_t workers = std::min<std::uint64_t>(std::max(threads, 1), total);
    if (workers <= 1) return scan_indices(0, total, n, absolute, decode);

    std::vector<ShardResult> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = total / workers;
    const std::uint64_t rem = total % workers;
    std::uint64_t start = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t len = chunk + (w < rem ? 1 : 0);
        const std::uint64_t lo = start, hi = start + len;
        start = hi;
        pool.emplace_back([&parts, w, lo, hi, n, absolute, decode] {
            parts[w] = scan_indices(lo, hi, n, absolute, decode);
        });
    }
    for (auto& th : pool) th.join();

    // Shards cover ascending ranges, so keeping the first shard attaining the
    // maximum keeps the lowest witness index regardless of worker count.
    ShardResult merged = parts[0];
    for (std::uint64_t w = 1; w < workers; ++w) {
        if (!parts[w].any) continue;
        if (!merged.any || parts[w].best > merged.best) merged = parts[w];
    }
    return merged;
}

IntMatrix decode_zero_one(std::uint64_t idx, int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, (idx >> (i * n + j)) & 1);
    return m;
}

IntMatrix decode_plus_minus(std::uint64_t idx, int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, ((idx >> (i * n + j)) & 1) ? -1 : 1);
    return m;
}

// Free entries are the (n-1)x(n-1) lower-right block; first row and column
// are fixed to +1. Bit k of idx is entry (1 + k/(n-1), 1 + k%(n-1)).
IntMatrix decode_normalized(std::uint64_t idx, int n) {
    IntMatrix m(n);
    for (int j = 0; j < n; ++j) m.set(0, j, 1);
    for (int i = 1; i < n; ++i) {
        m.set(i, 0, 1);
        for (int j = 1; j < n; ++j) {
            const int k = (i - 1) * (n - 1) + (j - 1);
            m.set(i, j, ((idx >> k) & 1) ? -1 : 1);
        }
    }
    return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

OracleReport brute_dn(int n, const OracleOptions& opts) {
    require_oracle_n(n, opts.force, "brute_dn");
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    const auto decode = [n](std::uint64_t idx, std::vector<Checked64>& buf) {
        for (int k = 0; k < n * n; ++k) buf[k] = static_cast<std::int64_t>((idx >> k) & 1);
    };
    const ShardResult best = sharded_max(total, n, opts.threads, false, decode);
    return {n,     best.best,           decode_zero_one(best.witness_index, n), EntryAlphabet::kZeroOne,
            total, seconds_since(t0), false};
}

OracleReport brute_mn(int n, const OracleOptions& opts) {
    require_oracle_n(n, opts.force, "brute_mn");
    const auto t0 = std::chrono::steady_clock::now();
    OracleReport report;
    report.n = n;
    report.alphabet = EntryAlphabet::kPlusMinus;
    report.normalized = opts.normalize && n > 1;
    report.witness = IntMatrix(n);

    if (!report.normalized) {
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        const auto decode = [n](std::uint64_t idx, std::vector<Checked64>& buf) {
            for (int k = 0; k < n * n; ++k) buf[k] = ((idx >> k) & 1) ? -1 : 1;
        };
        const ShardResult best = sharded_max(total, n, opts.threads, false, decode);
        report.value = best.best;
        report.witness = decode_plus_minus(best.witness_index, n);
        report.search_space = total;
    } else {
        // Any +-1 matrix can be row/column-negated onto this slice; each
        // negation flips the determinant sign, so max det over the full class
        // equals max |det| over the slice.
        const std::uint64_t total = std::uint64_t{1} << ((n - 1) * (n - 1));
        const auto decode = [n](std::uint64_t idx, std::vector<Checked64>& buf) {
            for (int j = 0; j < n; ++j) buf[j] = 1;
            for (int i = 1; i < n; ++i) {
                buf[static_cast<std::size_t>(i) * n] = 1;
                for (int j = 1; j < n; ++j) {
                    const int k = (i - 1) * (n - 1) + (j - 1);
                    buf[static_cast<std::size_t>(i) * n + j] = ((idx >> k) & 1) ? -1 : 1;
                }
            }
        };
        const ShardResult best = sharded_max(total, n, opts.threads, true, decode);
        report.value = best.best;
        report.witness = decode_normalized(best.witness_index, n);
        report.search_space = total;
        // Sign-correct the witness so det(witness) == value: negating the last
        // row flips the sign and stays inside the alphabet.
        if (det_bareiss(report.witness) != report.value) {
            for (int j = 0; j < n; ++j)
                report.witness.set(n - 1, j, checked_neg(report.witness.at(n - 1, j)));
        }
    }
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

RelationReport check_relation(int n, const OracleOptions& opts) {
    if (n < 2 || n > kOracleDefaultGuard)
        throw SizeGuardError("check_relation requires 2 <= n <= " + std::to_string(kOracleDefaultGuard) +
                             ", got " + std::to_string(n));
    const OracleReport m = brute_mn(n, opts);
    const OracleReport d = brute_dn(n - 1, opts);
    RelationReport rel;
    rel.n = n;
    rel.m_value = m.value;
    rel.d_value = d.value;
    rel.lhs = m.value;
    rel.rhs = checked_mul(std::int64_t{1} << (n - 1), d.value);
    rel.holds = rel.lhs == rel.rhs;
    return rel;
}

}  // namespace maxdet
