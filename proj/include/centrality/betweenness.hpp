#pragma once

#include "centrality/graph.hpp"
#include "centrality/score.hpp"

namespace centrality {

// Sum over ordered pairs (y, z), both distinct from x and with at least one
// y-z path, of the fraction of shortest y-z paths passing through x.
// Path counts are held in checked 64-bit integers.
ScoreVector betweenness(const Graph& g, int threads = 1);

// Same quantity by explicit enumeration of every shortest path along the BFS
// DAG of each source. Caps: n <= 64 and 5e7 enumerated paths (throws
// std::length_error beyond either).
ScoreVector betweenness_bruteforce(const Graph& g);

}  // namespace centrality
