#ifndef TFES_SOLVE_BRANCH_HPP
#define TFES_SOLVE_BRANCH_HPP

#include <optional>

#include "tfes/solution.hpp"

namespace tfes {

// Search-tree solver: repeatedly find a shortest temporal cycle and
// branch over its time-edges (edge_set) or its distinct connections
// (connection_set), spending one unit of budget per removal. Returns a
// minimum-cardinality feedback set of size <= k, or absent if none
// exists. Single-threaded evaluation is fully deterministic.
std::optional<Solution> solve_branch(const TemporalGraph& g, int k, ProblemVariant variant);

// Smallest k for which solve_branch succeeds; always exists because
// removing everything is feasible.
Solution solve_branch_optimum(const TemporalGraph& g, ProblemVariant variant);

}  // namespace tfes

#endif
