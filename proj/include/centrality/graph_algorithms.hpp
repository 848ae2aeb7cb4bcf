#pragma once

#include <vector>

#include "centrality/graph.hpp"

namespace centrality {

inline constexpr NodeId kUnreachable = static_cast<NodeId>(-1);

struct DistanceRow {
    NodeId source;
    std::vector<NodeId> dist;  // kUnreachable where no path exists
};

// Distances d(source, y) along arc direction.
DistanceRow bfs_distances(const Graph& g, NodeId source);
// Distances d(y, target) for every y, i.e. BFS over predecessor lists. Equals
// bfs_distances(g.transposed(), target).
DistanceRow bfs_distances_into(const Graph& g, NodeId target);

struct Partition {
    std::vector<NodeId> component_of;        // node -> component index
    std::vector<std::vector<NodeId>> members;  // each sorted ascending
    std::vector<bool> terminal;              // no arc leaves the component
    NodeId count() const { return static_cast<NodeId>(members.size()); }
};

Partition strongly_connected_components(const Graph& g);
// Components of the underlying symmetric graph; `terminal` is all-true.
Partition weakly_connected_components(const Graph& g);

// |{y : d(y, x) < inf}|; counts x itself.
NodeId coreachable_count(const Graph& g, NodeId x);
// Size of x's weakly connected component.
NodeId weakly_reachable_count(const Graph& g, NodeId x);
// |{y : d(y, x) <= t}|; equals coreachable_count for t >= n-1.
NodeId neighborhood_function(const Graph& g, NodeId x, NodeId t);

// y = x A and y = x A^T.
std::vector<double> apply_adjacency(const Graph& g, const std::vector<double>& x);
std::vector<double> apply_adjacency_transpose(const Graph& g, const std::vector<double>& x);
// y = x Abar where Abar has each nonnull row of A scaled to sum 1; null rows
// stay null, so total mass can only shrink.
std::vector<double> apply_out_normalized(const Graph& g, const std::vector<double>& x);
// y = x M where M is A^T with each nonnull row (the in-neighbor list of a
// node) scaled to sum 1: y[u] = sum over arcs u->v of x[v]/indegree(v).
std::vector<double> apply_in_normalized_transpose(const Graph& g, const std::vector<double>& x);

}  // namespace centrality
