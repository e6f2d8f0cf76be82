#include "maxdet/greedy_search.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "maxdet/checked_int.hpp"
#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

void require_form(const BorderForm& f, int guard, const char* who) {
    if (f.n < 1) throw DimensionError(std::string(who) + ": form dimension must be >= 1");
    if (f.n > guard)
        throw SizeGuardError(std::string(who) + " refuses n=" + std::to_string(f.n) +
                             " (guard n <= " + std::to_string(guard) + ")");
    if (f.coeffs.size() != f.n) throw DimensionError(std::string(who) + ": coefficient matrix size mismatch");
}

// Contribution of assigning (x_k, y_k) given that components k+1..n-1 are
// already assigned: the new bilinear terms are exactly those touching index k.
std::int64_t assign_delta(const BorderForm& f, const std::vector<std::uint8_t>& x,
                          const std::vector<std::uint8_t>& y, int k) {
    std::int64_t delta = 0;
    if (x[k]) {
        for (int j = k; j < f.n; ++j)
            if (y[j]) delta = checked_add(delta, f.coeffs.at(k, j));
    }
    if (y[k]) {
        for (int i = k + 1; i < f.n; ++i)
            if (x[i]) delta = checked_add(delta, f.coeffs.at(i, k));
    }
    return delta;
}

struct ExhaustiveState {
    explicit ExhaustiveState(const BorderForm& f) : form(f), x(f.n, 0), y(f.n, 0) {}

    const BorderForm& form;
    std::vector<std::uint8_t> x, y;
    bool have_best = false;
    std::int64_t best = 0;
    std::int64_t ties = 0;
    BorderAssignment chosen;
    bool collect = false;
    std::size_t cap = 0;
    std::vector<BorderAssignment> maximizers;
};

void exhaustive_rec(ExhaustiveState& s, int k, std::int64_t partial) {
    if (k < 0) {
        const std::int64_t value = checked_add(s.form.base_det, partial);
        if (!s.have_best || value > s.best) {
            s.have_best = true;
            s.best = value;
            s.ties = 1;
            s.chosen = {s.x, s.y, 1};
            if (s.collect) {
                s.maximizers.clear();
                if (s.cap > 0) s.maximizers.push_back(s.chosen);
            }
        } else if (value == s.best) {
            s.ties = checked_add(s.ties, 1);
            if (s.collect && s.maximizers.size() < s.cap) s.maximizers.push_back({s.x, s.y, 1});
        }
        return;
    }
    for (std::uint8_t xv = 0; xv <= 1; ++xv)
        for (std::uint8_t yv = 0; yv <= 1; ++yv) {
            s.x[k] = xv;
            s.y[k] = yv;
            exhaustive_rec(s, k - 1, checked_add(partial, assign_delta(s.form, s.x, s.y, k)));
        }
}

struct PassOneResult {
    std::int64_t best_bilinear = 0;
    std::int64_t ties = 0;
};

// Scans y = gray(t) for t in [t0, t1), keeping v = coeffs * y incrementally.
PassOneResult scan_y_range(const BorderForm& f, std::uint64_t t0, std::uint64_t t1) {
    const int n = f.n;
    std::vector<std::int64_t> v(n, 0);
    const std::uint64_t g0 = t0 ^ (t0 >> 1);
    for (int j = 0; j < n; ++j)
        if ((g0 >> j) & 1)
            for (int i = 0; i < n; ++i) v[i] = checked_add(v[i], f.coeffs.at(i, j));

    PassOneResult r;
    bool any = false;
    for (std::uint64_t t = t0; t < t1; ++t) {
        if (t != t0) {
            const int b = std::countr_zero(t);
            const bool now_set = ((t ^ (t >> 1)) >> b) & 1;
            for (int i = 0; i < n; ++i)
                v[i] = now_set ? checked_add(v[i], f.coeffs.at(i, b))
                               : checked_sub(v[i], f.coeffs.at(i, b));
        }
        std::int64_t s = 0;
        int zeros = 0;
        for (int i = 0; i < n; ++i) {
            if (v[i] > 0)
                s = checked_add(s, v[i]);
            else if (v[i] == 0)
                ++zeros;
        }
        const std::int64_t count = std::int64_t{1} << zeros;
        if (!any || s > r.best_bilinear) {
            any = true;
            r.best_bilinear = s;
            r.ties = count;
        } else if (s == r.best_bilinear) {
            r.ties = checked_add(r.ties, count);
        }
    }
    return r;
}

PassOneResult pass_one(const BorderForm& f, int threads) {
    const std::uint64_t total = std::uint64_t{1} << f.n;
    const std::uint64_t workers =
        std::min<std::uint64_t>(std::max(threads, 1), total);
    if (workers <= 1) return scan_y_range(f, 0, total);

    std::vector<PassOneResult> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = total / workers;
    const std::uint64_t rem = total % workers;
    std::uint64_t start = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t len = chunk + (w < rem ? 1 : 0);
        const std::uint64_t t0 = start, t1 = start + len;
        start = t1;
        pool.emplace_back([&f, &parts, w, t0, t1] { parts[w] = scan_y_range(f, t0, t1); });
    }
    for (auto& th : pool) th.join();

    // Order-fixed merge: result is independent of scheduling.
    PassOneResult merged = parts[0];
    for (std::uint64_t w = 1; w < workers; ++w) {
        if (parts[w].best_bilinear > merged.best_bilinear) {
            merged = parts[w];
        } else if (parts[w].best_bilinear == merged.best_bilinear) {
            merged.ties = checked_add(merged.ties, parts[w].ties);
        }
    }
    return merged;
}

// Positive-part prefix tables for the admissible pass-2 bound.
struct BoundTables {
    int n;
    // row[i][m] = sum_{j<m} max(0, C[i][j]); col[j][m] = sum_{i<m} max(0, C[i][j]);
    // all[m] = sum_{i<m, j<m} max(0, C[i][j]).
    std::vector<std::int64_t> row, col, all;

    explicit BoundTables(const BorderForm& f) : n(f.n) {
        row.assign(static_cast<std::size_t>(n) * (n + 1), 0);
        col.assign(static_cast<std::size_t>(n) * (n + 1), 0);
        all.assign(n + 1, 0);
        for (int i = 0; i < n; ++i)
            for (int m = 1; m <= n; ++m) {
                const std::int64_t c = f.coeffs.at(i, m - 1);
                row_at(i, m) = checked_add(row_at(i, m - 1), c > 0 ? c : 0);
            }
        for (int j = 0; j < n; ++j)
            for (int m = 1; m <= n; ++m) {
                const std::int64_t c = f.coeffs.at(m - 1, j);
                col_at(j, m) = checked_add(col_at(j, m - 1), c > 0 ? c : 0);
            }
        for (int m = 1; m <= n; ++m) {
            std::int64_t acc = 0;
            for (int i = 0; i < m; ++i) acc = checked_add(acc, row_at(i, m));
            all[m] = acc;
        }
    }

    std::int64_t& row_at(int i, int m) { return row[static_cast<std::size_t>(i) * (n + 1) + m]; }
    std::int64_t& col_at(int j, int m) { return col[static_cast<std::size_t>(j) * (n + 1) + m]; }
    std::int64_t row_at(int i, int m) const { return row[static_cast<std::size_t>(i) * (n + 1) + m]; }
    std::int64_t col_at(int j, int m) const { return col[static_cast<std::size_t>(j) * (n + 1) + m]; }
};

struct PassTwoState {
    const BorderForm& form;
    const BoundTables& tables;
    std::int64_t target = 0;  // bilinear value to attain
    std::vector<std::uint8_t> x, y;
    std::size_t cap = 0;      // stop after this many attaining leaves
    std::int64_t found = 0;
    std::vector<BorderAssignment>* out = nullptr;
};

// Upper bound on what the unassigned components {0..m-1} can still add,
// given the partial assignment of components {m..n-1}. Every term with an
// unassigned factor is relaxed to its positive part; terms whose assigned
// factor is 0 are dropped. Never underestimates, so pruning is exact.
std::int64_t optimistic_bound(const PassTwoState& s, int m, std::int64_t partial) {
    const int n = s.form.n;
    std::int64_t b = checked_add(partial, s.tables.all[m]);
    for (int i = m; i < n; ++i)
        if (s.x[i]) b = checked_add(b, s.tables.row_at(i, m));
    for (int j = m; j < n; ++j)
        if (s.y[j]) b = checked_add(b, s.tables.col_at(j, m));
    return b;
}

// Depth-first in enumeration order over components m-1, ..., 0; emits leaves
// attaining the target until the cap is reached. Returns true when capped.
bool pass_two_rec(PassTwoState& s, int m, std::int64_t partial) {
    if (m == 0) {
        if (partial != s.target) return false;
        s.found = checked_add(s.found, 1);
        if (s.out) s.out->push_back({s.x, s.y, 1});
        return static_cast<std::size_t>(s.found) >= s.cap;
    }
    const int k = m - 1;
    for (std::uint8_t xv = 0; xv <= 1; ++xv)
        for (std::uint8_t yv = 0; yv <= 1; ++yv) {
            s.x[k] = xv;
            s.y[k] = yv;
            const std::int64_t np = checked_add(partial, assign_delta(s.form, s.x, s.y, k));
            if (optimistic_bound(s, k, np) >= s.target)
                if (pass_two_rec(s, k, np)) return true;
        }
    s.x[k] = 0;
    s.y[k] = 0;
    return false;
}

BorderAssignment recover_first_maximizer(const BorderForm& f, const BoundTables& tables,
                                         std::int64_t target_bilinear) {
    std::vector<BorderAssignment> out;
    PassTwoState s{f, tables, target_bilinear,
                   std::vector<std::uint8_t>(f.n, 0), std::vector<std::uint8_t>(f.n, 0),
                   1, 0, &out};
    pass_two_rec(s, f.n, 0);
    // Pass 1 guarantees the target is attained; an empty result is a logic error.
    if (out.empty()) throw std::logic_error("maximizer recovery found no attaining assignment");
    return out.front();
}

}  // namespace

std::uint64_t paper_lex_key(const BorderAssignment& asg) {
    std::uint64_t key = 0;
    for (int i = asg.size() - 1; i >= 0; --i)
        key = (key << 2) | (static_cast<std::uint64_t>(asg.x[i]) << 1) | asg.y[i];
    return key;
}

MaxResult maximize_exhaustive(const BorderForm& f, const SearchOptions& opts) {
    require_form(f, kExhaustiveDimensionGuard, "maximize_exhaustive");
    ExhaustiveState s(f);
    s.collect = opts.policy == TieBreakPolicy::kReportAll;
    s.cap = opts.maximizer_cap;
    exhaustive_rec(s, f.n - 1, 0);
    MaxResult r;
    r.value = s.best;
    r.chosen = std::move(s.chosen);
    r.tie_count = s.ties;
    r.maximizers = std::move(s.maximizers);
    return r;
}

MaxResult maximize_fast(const BorderForm& f, const SearchOptions& opts) {
    require_form(f, kFastDimensionGuard, "maximize_fast");
    const PassOneResult p1 = pass_one(f, opts.threads);
    const BoundTables tables(f);

    MaxResult r;
    r.value = checked_add(f.base_det, p1.best_bilinear);
    r.tie_count = p1.ties;
    r.chosen = recover_first_maximizer(f, tables, p1.best_bilinear);
    if (opts.policy == TieBreakPolicy::kReportAll && opts.maximizer_cap > 0) {
        PassTwoState s{f, tables, p1.best_bilinear,
                       std::vector<std::uint8_t>(f.n, 0), std::vector<std::uint8_t>(f.n, 0),
                       opts.maximizer_cap, 0, &r.maximizers};
        pass_two_rec(s, f.n, 0);
    }
    return r;
}

MaximizerList enumerate_maximizers(const BorderForm& f, std::size_t cap, int threads) {
    require_form(f, kFastDimensionGuard, "enumerate_maximizers");
    const PassOneResult p1 = pass_one(f, threads);
    const BoundTables tables(f);
    MaximizerList list;
    list.total = p1.ties;
    if (cap == 0) return list;
    PassTwoState s{f, tables, p1.best_bilinear,
                   std::vector<std::uint8_t>(f.n, 0), std::vector<std::uint8_t>(f.n, 0),
                   cap, 0, &list.assignments};
    pass_two_rec(s, f.n, 0);
    return list;
}

}  // namespace maxdet
