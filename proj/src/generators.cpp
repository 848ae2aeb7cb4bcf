#include "centrality/generators.hpp"

#include "centrality/errors.hpp"

namespace centrality {

namespace {

void append_clique_and_cycle(std::vector<Arc>& arcs, NodeId k, NodeId p) {
    for (NodeId u = 0; u < k; ++u)
        for (NodeId v = 0; v < k; ++v)
            if (u != v) arcs.push_back({u, v});
    for (NodeId i = 0; i < p; ++i) arcs.push_back({k + i, k + (i + 1) % p});
}

}  // namespace

Graph make_clique_cycle(NodeId k, NodeId p) {
    if (k < 1 || p < 1) throw InvalidParameter("clique and cycle sizes must be at least 1");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(k) * (k - 1) + p);
    append_clique_and_cycle(arcs, k, p);
    return Graph::from_arcs(k + p, std::move(arcs));
}

Graph make_bridged_clique_cycle(NodeId k, NodeId p) {
    if (k < 1 || p < 1) throw InvalidParameter("clique and cycle sizes must be at least 1");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(k) * (k - 1) + p + 2);
    append_clique_and_cycle(arcs, k, p);
    arcs.push_back({0, k});
    arcs.push_back({k, 0});
    return Graph::from_arcs(k + p, std::move(arcs));
}

}  // namespace centrality
