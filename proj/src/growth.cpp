#include "maxdet/growth.hpp"

#include <stdexcept>
#include <string>

#include "maxdet/border_form.hpp"
#include "maxdet/exact_linalg.hpp"

namespace maxdet {

namespace {

GrowthNode make_root(const BinaryMatrix& start) {
    const std::int64_t det = det_bareiss(start);
    if (det <= 0)
        throw InputError("start matrix must have positive determinant, got " + std::to_string(det));
    return {start, det, std::nullopt, 1};
}

GrowthNode make_child(const GrowthNode& node, const BorderAssignment& asg, std::int64_t value,
                      std::int64_t tie_count) {
    GrowthNode child{bordered(node.matrix, asg), value, std::nullopt, tie_count};
    // Invariant: the search value is the determinant of the assembled matrix.
    if (det_bareiss(child.matrix) != value)
        throw std::logic_error("grown child determinant does not match search value");
    return child;
}

}  // namespace

GrowthNode grow_once(const GrowthNode& node, const GrowthOptions& opts) {
    if (node.det <= 0)
        throw InputError("grow_once requires a node with positive determinant");
    const BorderForm form = build_border_form(node.matrix);
    const MaxResult res = maximize_fast(form, {opts.tie_break, opts.threads});
    return make_child(node, res.chosen, res.value, res.tie_count);
}

std::vector<GrowthNode> grow_sequence(const BinaryMatrix& start, int steps,
                                      const GrowthOptions& opts) {
    std::vector<GrowthNode> chain;
    chain.push_back(make_root(start));
    for (int s = 0; s < steps; ++s) {
        GrowthNode child = grow_once(chain.back(), opts);
        child.parent = chain.size() - 1;
        chain.push_back(std::move(child));
    }
    return chain;
}

SolutionForest grow_forest(const BinaryMatrix& start, int steps, const ForestOptions& opts) {
    SolutionForest forest;
    forest.branch_policy = opts.branch;
    forest.limit = opts.limit;
    forest.dedupe = opts.dedupe;
    forest.nodes.push_back(make_root(start));
    forest.roots.push_back(0);
    if (opts.node_cap == 0) {
        forest.nodes.clear();
        forest.roots.clear();
        forest.truncated = true;
        return forest;
    }

    std::vector<std::size_t> level{0};
    for (int s = 0; s < steps && !level.empty(); ++s) {
        // Generate the whole next level first so dedupe and the node budget
        // see candidates in their deterministic order.
        std::vector<GrowthNode> candidates;
        for (std::size_t idx : level) {
            const GrowthNode& node = forest.nodes[idx];
            const BorderForm form = build_border_form(node.matrix);
            if (opts.branch == BranchPolicy::kFirst) {
                const MaxResult res =
                    maximize_fast(form, {TieBreakPolicy::kPaperLex, opts.threads});
                GrowthNode child = make_child(node, res.chosen, res.value, res.tie_count);
                child.parent = idx;
                candidates.push_back(std::move(child));
            } else {
                const std::size_t per_node =
                    opts.branch == BranchPolicy::kLimit ? opts.limit : opts.node_cap;
                const MaximizerList list = enumerate_maximizers(form, per_node, opts.threads);
                if (list.assignments.empty()) continue;
                const std::int64_t value = eval_border_form(form, list.assignments.front());
                for (const BorderAssignment& asg : list.assignments) {
                    GrowthNode child = make_child(node, asg, value, list.total);
                    child.parent = idx;
                    candidates.push_back(std::move(child));
                }
            }
        }

        if (opts.dedupe) {
            std::vector<GrowthNode> unique;
            for (auto& c : candidates) {
                bool seen = false;
                for (const auto& u : unique)
                    if (u.matrix == c.matrix) {
                        seen = true;
                        break;
                    }
                if (!seen) unique.push_back(std::move(c));
            }
            candidates = std::move(unique);
        }

        level.clear();
        for (auto& c : candidates) {
            if (forest.nodes.size() >= opts.node_cap) {
                forest.truncated = true;
                return forest;
            }
            level.push_back(forest.nodes.size());
            forest.nodes.push_back(std::move(c));
        }
    }
    return forest;
}

std::optional<DivergenceReport> divergence_from_reference(const std::vector<GrowthNode>& chain,
                                                          const BinaryMatrix& reference) {
    for (const GrowthNode& node : chain) {
        const int k = node.depth();
        if (k > reference.size()) break;
        BinaryMatrix block(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) block.set(i, j, reference.at(i, j));
        if (!(node.matrix == block))
            return DivergenceReport{k, node.tie_count, node.matrix, block};
    }
    return std::nullopt;
}

}  // namespace maxdet
