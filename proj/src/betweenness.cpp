#include "centrality/betweenness.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "centrality/graph_algorithms.hpp"
#include "centrality/parallel.hpp"

namespace centrality {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("shortest-path count overflows 64 bits");
    return a + b;
}

// One-source pass: BFS orders nodes by distance, sigma counts shortest paths,
// then dependencies accumulate over the BFS order reversed. An arc v->w lies
// on a shortest path exactly when dist[w] == dist[v] + 1.
struct SourceBuffers {
    std::vector<NodeId> dist, order;
    std::vector<std::uint64_t> sigma;
    std::vector<double> delta;
    std::vector<NodeId> touched;

    void init(NodeId n) {
        dist.assign(n, kUnreachable);
        sigma.assign(n, 0);
        delta.assign(n, 0.0);
        order.reserve(n);
        touched.reserve(n);
    }

    void run(const Graph& g, NodeId s, std::vector<double>& acc) {
        order.clear();
        touched.clear();
        dist[s] = 0;
        sigma[s] = 1;
        touched.push_back(s);
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            NodeId v = order[head];
            for (NodeId w : g.successors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    touched.push_back(w);
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] = checked_add(sigma[w], sigma[v]);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            NodeId v = order[i];
            for (NodeId w : g.successors(v))
                if (dist[w] == dist[v] + 1)
                    delta[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                                (1.0 + delta[w]);
            if (v != s) acc[v] += delta[v];
        }
        for (NodeId v : touched) {
            dist[v] = kUnreachable;
            sigma[v] = 0;
            delta[v] = 0.0;
        }
    }
};

}  // namespace

ScoreVector betweenness(const Graph& g, int threads) {
    const NodeId n = g.node_count();
    ScoreVector sv;
    sv.measure = "betweenness";
    sv.scores.assign(n, 0.0);
    if (threads < 1) threads = 1;
    std::vector<std::vector<double>> partial(threads, std::vector<double>(n, 0.0));
    parallel_chunks(n, threads, [&](int t, std::uint64_t begin, std::uint64_t end) {
        SourceBuffers buf;
        buf.init(n);
        for (std::uint64_t s = begin; s < end; ++s)
            buf.run(g, static_cast<NodeId>(s), partial[t]);
    });
    for (int t = 0; t < threads; ++t)
        for (NodeId v = 0; v < n; ++v) sv.scores[v] += partial[t][v];
    return sv;
}

ScoreVector betweenness_bruteforce(const Graph& g) {
    const NodeId n = g.node_count();
    if (n > 64) throw std::length_error("brute-force betweenness is limited to 64 nodes");
    ScoreVector sv;
    sv.measure = "betweenness";
    sv.scores.assign(n, 0.0);
    std::uint64_t budget = 50000000;

    std::vector<NodeId> path;
    std::vector<double> on_path_count(n, 0.0);
    for (NodeId s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        for (NodeId t = 0; t < n; ++t) {
            if (t == s || row.dist[t] == kUnreachable) continue;
            // Walk the shortest-path DAG backward from t, counting for each
            // interior node the number of s-t shortest paths through it.
            std::fill(on_path_count.begin(), on_path_count.end(), 0.0);
            std::uint64_t total = 0;
            path.clear();
            path.push_back(t);
            // Explicit DFS stack of (node, next predecessor index).
            std::vector<std::pair<NodeId, std::size_t>> stack{{t, 0}};
            while (!stack.empty()) {
                auto& [v, idx] = stack.back();
                if (v == s) {
                    if (budget == 0) throw std::length_error("shortest-path enumeration budget exhausted");
                    --budget;
                    ++total;
                    for (NodeId u : path)
                        if (u != s && u != t) on_path_count[u] += 1.0;
                    path.pop_back();
                    stack.pop_back();
                    continue;
                }
                auto preds = g.predecessors(v);
                bool descended = false;
                while (idx < preds.size()) {
                    NodeId u = preds[idx++];
                    if (row.dist[u] != kUnreachable && row.dist[u] + 1 == row.dist[v]) {
                        path.push_back(u);
                        stack.push_back({u, 0});
                        descended = true;
                        break;
                    }
                }
                if (!descended) {
                    path.pop_back();
                    stack.pop_back();
                }
            }
            for (NodeId x = 0; x < n; ++x)
                if (on_path_count[x] > 0.0)
                    sv.scores[x] += on_path_count[x] / static_cast<double>(total);
        }
    }
    return sv;
}

}  // namespace centrality
