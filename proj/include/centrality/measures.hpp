#pragma once

#include <string>
#include <vector>

#include "centrality/graph.hpp"
#include "centrality/score.hpp"
#include "centrality/spectral.hpp"

namespace centrality {

// Accepted measure ids: degree, harmonic, closeness, lin, betweenness,
// dominant, seeley, katz, pagerank, hits, salsa, beta, indegree-co,
// indegree-weak, beta-co, beta-weak.
const std::vector<std::string>& measure_ids();
bool is_measure_id(const std::string& id);

// Dispatch by id; "hits" yields the authority vector. Throws InvalidParameter
// on unknown ids before touching the graph.
ScoreVector compute_measure(const Graph& g, const std::string& id,
                            const SpectralParams& params = {}, int threads = 1);

}  // namespace centrality
