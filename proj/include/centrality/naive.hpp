#pragma once

#include "centrality/graph.hpp"
#include "centrality/score.hpp"

namespace centrality {

// Sum over in-neighbors y of 1/outdegree(y); equals the row vector 1 Abar.
ScoreVector beta_measure(const Graph& g);
double beta_measure_of(const Graph& g, NodeId x);

enum class DensityTerm { Indegree, Beta };
enum class SizeTerm { Coreachable, WeaklyReachable };

// Product of a local in-link mass and a reachable-set size. Measure ids:
// indegree-co, indegree-weak, beta-co, beta-weak.
ScoreVector product_measure(const Graph& g, DensityTerm density, SizeTerm size);
double product_measure_of(const Graph& g, NodeId x, DensityTerm density, SizeTerm size);

}  // namespace centrality
