#include "centrality/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace centrality {

namespace {

template <typename Neighbors>
DistanceRow bfs(const Graph& g, NodeId start, Neighbors&& neighbors) {
    if (start >= g.node_count()) throw std::out_of_range("node out of range");
    DistanceRow row{start, std::vector<NodeId>(g.node_count(), kUnreachable)};
    row.dist[start] = 0;
    std::vector<NodeId> frontier{start}, next;
    NodeId d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (NodeId u : frontier)
            for (NodeId v : neighbors(u))
                if (row.dist[v] == kUnreachable) {
                    row.dist[v] = d;
                    next.push_back(v);
                }
        frontier.swap(next);
    }
    return row;
}

}  // namespace

DistanceRow bfs_distances(const Graph& g, NodeId source) {
    return bfs(g, source, [&g](NodeId u) { return g.successors(u); });
}

DistanceRow bfs_distances_into(const Graph& g, NodeId target) {
    return bfs(g, target, [&g](NodeId u) { return g.predecessors(u); });
}

Partition strongly_connected_components(const Graph& g) {
    const NodeId n = g.node_count();
    Partition part;
    part.component_of.assign(n, kUnreachable);

    // Iterative Tarjan; components are numbered in completion order.
    std::vector<NodeId> index(n, kUnreachable), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    struct Frame {
        NodeId node;
        std::size_t next;
    };
    std::vector<Frame> call;
    NodeId counter = 0;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != kUnreachable) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [u, next] = call.back();
            auto succ = g.successors(u);
            if (next < succ.size()) {
                NodeId v = succ[next++];
                if (index[v] == kUnreachable) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    call.push_back({v, 0});
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
            } else {
                if (low[u] == index[u]) {
                    std::vector<NodeId> members;
                    NodeId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        part.component_of[w] = part.count();
                        members.push_back(w);
                    } while (w != u);
                    std::sort(members.begin(), members.end());
                    part.members.push_back(std::move(members));
                }
                NodeId finished = u;
                call.pop_back();
                if (!call.empty()) {
                    NodeId parent = call.back().node;
                    low[parent] = std::min(low[parent], low[finished]);
                }
            }
        }
    }

    part.terminal.assign(part.count(), true);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.successors(u))
            if (part.component_of[u] != part.component_of[v])
                part.terminal[part.component_of[u]] = false;
    return part;
}

Partition weakly_connected_components(const Graph& g) {
    const NodeId n = g.node_count();
    Partition part;
    part.component_of.assign(n, kUnreachable);
    for (NodeId root = 0; root < n; ++root) {
        if (part.component_of[root] != kUnreachable) continue;
        NodeId comp = part.count();
        std::vector<NodeId> members;
        std::deque<NodeId> queue{root};
        part.component_of[root] = comp;
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            members.push_back(u);
            auto visit = [&](NodeId v) {
                if (part.component_of[v] == kUnreachable) {
                    part.component_of[v] = comp;
                    queue.push_back(v);
                }
            };
            for (NodeId v : g.successors(u)) visit(v);
            for (NodeId v : g.predecessors(u)) visit(v);
        }
        std::sort(members.begin(), members.end());
        part.members.push_back(std::move(members));
    }
    part.terminal.assign(part.count(), true);
    return part;
}

NodeId coreachable_count(const Graph& g, NodeId x) {
    auto row = bfs_distances_into(g, x);
    NodeId count = 0;
    for (NodeId d : row.dist)
        if (d != kUnreachable) ++count;
    return count;
}

NodeId weakly_reachable_count(const Graph& g, NodeId x) {
    if (x >= g.node_count()) throw std::out_of_range("node out of range");
    auto part = weakly_connected_components(g);
    return static_cast<NodeId>(part.members[part.component_of[x]].size());
}

NodeId neighborhood_function(const Graph& g, NodeId x, NodeId t) {
    auto row = bfs_distances_into(g, x);
    NodeId count = 0;
    for (NodeId d : row.dist)
        if (d != kUnreachable && d <= t) ++count;
    return count;
}

std::vector<double> apply_adjacency(const Graph& g, const std::vector<double>& x) {
    std::vector<double> y(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : g.predecessors(v)) y[v] += x[u];
    return y;
}

std::vector<double> apply_adjacency_transpose(const Graph& g, const std::vector<double>& x) {
    std::vector<double> y(g.node_count(), 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.successors(u)) y[u] += x[v];
    return y;
}

std::vector<double> apply_out_normalized(const Graph& g, const std::vector<double>& x) {
    std::vector<double> y(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : g.predecessors(v)) y[v] += x[u] / g.out_degree(u);
    return y;
}

std::vector<double> apply_in_normalized_transpose(const Graph& g, const std::vector<double>& x) {
    std::vector<double> y(g.node_count(), 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.successors(u)) y[u] += x[v] / g.in_degree(v);
    return y;
}

}  // namespace centrality
