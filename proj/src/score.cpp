#include "centrality/score.hpp"

#include <algorithm>
#include <numeric>

namespace centrality {

std::vector<NodeId> rank_by(const ScoreVector& sv) {
    std::vector<NodeId> order(sv.scores.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (sv.scores[a] != sv.scores[b]) return sv.scores[a] > sv.scores[b];
        return a < b;
    });
    return order;
}

}  // namespace centrality
