#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "centrality/graph.hpp"

namespace centrality {

// Per-node scores of one measure on one graph, with the parameters that
// produced them echoed for reporting.
struct ScoreVector {
    std::string measure;
    std::vector<std::pair<std::string, double>> params;
    std::vector<double> scores;
    bool normalized = false;   // scores sum to 1
    bool degenerate = false;   // defined fallback (zero vector) was reported
    std::uint64_t iterations = 0;
    double residual = 0.0;
};

// Node ids ordered by descending score, ties broken by ascending id.
std::vector<NodeId> rank_by(const ScoreVector& s);

}  // namespace centrality
