#ifndef TFES_SOLVE_EXHAUSTIVE_HPP
#define TFES_SOLVE_EXHAUSTIVE_HPP

#include <optional>

#include "tfes/solution.hpp"

namespace tfes {

// Ground-truth oracles. Subsets are enumerated by increasing cardinality
// and lexicographically within one cardinality, so the first feasible
// set is a minimum and the output is deterministic.

inline constexpr std::size_t kExhaustiveEdgeGuard = 25;

// Minimum feedback edge set by full enumeration. Absent iff `cap` is
// given and the minimum exceeds it. Graphs with more than
// kExhaustiveEdgeGuard time-edges are rejected unless force is set.
std::optional<Solution> solve_exhaustive_edges(const TemporalGraph& g, PathModel model,
                                               std::optional<int> cap = std::nullopt,
                                               bool force = false);

// Minimum feedback connection set; the guard applies to the underlying
// edge count.
std::optional<Solution> solve_exhaustive_connections(const TemporalGraph& g, PathModel model,
                                                     std::optional<int> cap = std::nullopt,
                                                     bool force = false);

}  // namespace tfes

#endif
