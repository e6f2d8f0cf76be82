#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxdet/greedy_search.hpp"
#include "maxdet/matrix.hpp"

namespace maxdet {

// The inductive construction: grow a nested sequence of 0/1 matrices, each
// bordering the previous one (which stays as the upper-left block) so the
// determinant of the bordered matrix is maximal. Because maximizers can tie,
// the complete object is a forest of chains; the default policy follows the
// paper-lex first maximizer only.

struct GrowthNode {
    BinaryMatrix matrix;
    std::int64_t det = 0;
    std::optional<std::size_t> parent;  // index into the owning container
    std::int64_t tie_count = 1;         // maximizer multiplicity of the producing step

    int depth() const { return matrix.size(); }
};

struct GrowthOptions {
    TieBreakPolicy tie_break = TieBreakPolicy::kPaperLex;
    int threads = 1;
};

// One bordering step. Requires node.det > 0; the child's determinant is the
// maximal bordered determinant, so chains are nondecreasing.
GrowthNode grow_once(const GrowthNode& node, const GrowthOptions& opts = {});

// The chain from a start matrix, including the start node. parent links form
// the chain; the start must have positive determinant.
std::vector<GrowthNode> grow_sequence(const BinaryMatrix& start, int steps,
                                      const GrowthOptions& opts = {});

enum class BranchPolicy { kFirst, kAll, kLimit };

struct ForestOptions {
    BranchPolicy branch = BranchPolicy::kFirst;
    std::size_t limit = 1;      // children per node under kLimit
    std::size_t node_cap = 10000;  // total node budget
    bool dedupe = false;        // merge identical matrices within a level
    int threads = 1;
};

// Nodes in breadth-first order (level by level, children in paper-lex order
// within a parent, parents in level order); deterministic for any thread
// count. A run that exhausts the node budget returns the partial forest with
// truncated set.
struct SolutionForest {
    std::vector<GrowthNode> nodes;
    std::vector<std::size_t> roots;
    BranchPolicy branch_policy = BranchPolicy::kFirst;
    std::size_t limit = 1;  // meaningful under kLimit
    bool dedupe = false;
    bool truncated = false;
};

SolutionForest grow_forest(const BinaryMatrix& start, int steps, const ForestOptions& opts = {});

// First point where a chain stops matching the upper-left blocks of a
// reference matrix, if any. Carries what a divergence report needs: the step's
// tie multiplicity and both candidate matrices.
struct DivergenceReport {
    int depth = 0;              // dimension at which the chain first differs
    std::int64_t tie_count = 0; // multiplicity of the step that produced it
    BinaryMatrix computed;
    BinaryMatrix expected;      // the reference's upper-left block of that size
};

std::optional<DivergenceReport> divergence_from_reference(const std::vector<GrowthNode>& chain,
                                                          const BinaryMatrix& reference);

}  // namespace maxdet
