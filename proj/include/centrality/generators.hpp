#pragma once

#include "centrality/graph.hpp"

namespace centrality {

// Disjoint union of a k-clique (ids 0..k-1, all ordered pairs) and a directed
// p-cycle (ids k..k+p-1). k, p >= 1; p = 1 degenerates to a loop.
Graph make_clique_cycle(NodeId k, NodeId p);

// The same two pieces joined by a bidirectional bridge between clique node 0
// and cycle node k, making the graph strongly connected.
Graph make_bridged_clique_cycle(NodeId k, NodeId p);

}  // namespace centrality
