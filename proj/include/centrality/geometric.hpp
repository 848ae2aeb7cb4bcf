#pragma once

#include "centrality/graph.hpp"
#include "centrality/score.hpp"

namespace centrality {

// Indegree; measure id "degree".
ScoreVector indegree_centrality(const Graph& g);

// 1 / sum of finite d(y, x); 0 when nothing but x itself coreaches x.
ScoreVector closeness(const Graph& g, int threads = 1);
double closeness_of(const Graph& g, NodeId x);

// |coreachable|^2 / sum of finite d(y, x); 1 when the distance sum is zero.
ScoreVector lin(const Graph& g, int threads = 1);
double lin_of(const Graph& g, NodeId x);

// Sum over y != x of 1/d(y, x), with 1/inf = 0.
ScoreVector harmonic(const Graph& g, int threads = 1);
double harmonic_of(const Graph& g, NodeId x);

}  // namespace centrality
