#include "centrality/geometric.hpp"

#include <cstdint>

#include "centrality/graph_algorithms.hpp"
#include "centrality/parallel.hpp"

namespace centrality {

namespace {

// Distance sum and coreachable count for one target, from a scratch row that
// gets reused across calls on the same thread.
struct TargetStats {
    std::uint64_t dist_sum = 0;
    NodeId coreachable = 0;
};

TargetStats target_stats(const Graph& g, NodeId x, std::vector<NodeId>& scratch) {
    scratch.assign(g.node_count(), kUnreachable);
    scratch[x] = 0;
    std::vector<NodeId> frontier{x}, next;
    NodeId d = 0;
    TargetStats stats;
    stats.coreachable = 1;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (NodeId u : frontier)
            for (NodeId v : g.predecessors(u))
                if (scratch[v] == kUnreachable) {
                    scratch[v] = d;
                    stats.dist_sum += d;
                    ++stats.coreachable;
                    next.push_back(v);
                }
        frontier.swap(next);
    }
    return stats;
}

double closeness_from(const TargetStats& s) {
    return s.dist_sum == 0 ? 0.0 : 1.0 / static_cast<double>(s.dist_sum);
}

double lin_from(const TargetStats& s) {
    double r = static_cast<double>(s.coreachable);
    return s.dist_sum == 0 ? 1.0 : r * r / static_cast<double>(s.dist_sum);
}

double harmonic_from(const Graph& g, NodeId x, std::vector<NodeId>& scratch) {
    target_stats(g, x, scratch);
    double sum = 0.0;
    for (NodeId y = 0; y < g.node_count(); ++y)
        if (y != x && scratch[y] != kUnreachable) sum += 1.0 / static_cast<double>(scratch[y]);
    return sum;
}

template <typename PerNode>
ScoreVector sweep(const Graph& g, int threads, std::string measure, PerNode&& per_node) {
    ScoreVector sv;
    sv.measure = std::move(measure);
    sv.scores.assign(g.node_count(), 0.0);
    parallel_chunks(g.node_count(), threads, [&](int, std::uint64_t begin, std::uint64_t end) {
        std::vector<NodeId> scratch;
        for (std::uint64_t x = begin; x < end; ++x)
            sv.scores[x] = per_node(static_cast<NodeId>(x), scratch);
    });
    return sv;
}

}  // namespace

ScoreVector indegree_centrality(const Graph& g) {
    ScoreVector sv;
    sv.measure = "degree";
    sv.scores.resize(g.node_count());
    for (NodeId x = 0; x < g.node_count(); ++x)
        sv.scores[x] = static_cast<double>(g.in_degree(x));
    return sv;
}

ScoreVector closeness(const Graph& g, int threads) {
    return sweep(g, threads, "closeness", [&g](NodeId x, std::vector<NodeId>& scratch) {
        return closeness_from(target_stats(g, x, scratch));
    });
}

double closeness_of(const Graph& g, NodeId x) {
    std::vector<NodeId> scratch;
    return closeness_from(target_stats(g, x, scratch));
}

ScoreVector lin(const Graph& g, int threads) {
    return sweep(g, threads, "lin", [&g](NodeId x, std::vector<NodeId>& scratch) {
        return lin_from(target_stats(g, x, scratch));
    });
}

double lin_of(const Graph& g, NodeId x) {
    std::vector<NodeId> scratch;
    return lin_from(target_stats(g, x, scratch));
}

ScoreVector harmonic(const Graph& g, int threads) {
    return sweep(g, threads, "harmonic", [&g](NodeId x, std::vector<NodeId>& scratch) {
        return harmonic_from(g, x, scratch);
    });
}

double harmonic_of(const Graph& g, NodeId x) {
    std::vector<NodeId> scratch;
    return harmonic_from(g, x, scratch);
}

}  // namespace centrality
