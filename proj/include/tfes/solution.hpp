#ifndef TFES_SOLUTION_HPP
#define TFES_SOLUTION_HPP

#include <vector>

#include "tfes/core.hpp"
#include "tfes/reach.hpp"

namespace tfes {

// The four problem variants: what gets removed (time-edges vs. whole
// connections) crossed with the cycle model.
enum class ProblemTarget { edge_set, connection_set };

struct ProblemVariant {
    ProblemTarget target = ProblemTarget::edge_set;
    PathModel model = PathModel::strict;
};

inline constexpr ProblemVariant kStfes{ProblemTarget::edge_set, PathModel::strict};
inline constexpr ProblemVariant kTfes{ProblemTarget::edge_set, PathModel::non_strict};
inline constexpr ProblemVariant kStfcs{ProblemTarget::connection_set, PathModel::strict};
inline constexpr ProblemVariant kTfcs{ProblemTarget::connection_set, PathModel::non_strict};

// A feedback set. Exactly one of the two item vectors is meaningful,
// selected by `kind`.
struct Solution {
    ProblemTarget kind = ProblemTarget::edge_set;
    std::vector<TimeEdge> time_edges;
    std::vector<Connection> connections;

    std::size_t size() const {
        return kind == ProblemTarget::edge_set ? time_edges.size() : connections.size();
    }
};

}  // namespace tfes

#endif
