#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace centrality {

using NodeId = std::uint32_t;
using Arc = std::pair<NodeId, NodeId>;

// Immutable directed graph over ids 0..n-1. The arc set is deduplicated;
// successor and predecessor lists are sorted ascending. Loops are kept (they
// count toward degrees but never shorten a distance).
class Graph {
public:
    Graph();

    // `n` may exceed 1 + max referenced id (trailing isolated nodes).
    static Graph from_arcs(NodeId n, std::vector<Arc> arcs);

    NodeId node_count() const { return n_; }
    std::uint64_t arc_count() const { return succ_.size(); }
    std::uint64_t loop_count() const { return loops_; }

    NodeId out_degree(NodeId u) const {
        return static_cast<NodeId>(succ_off_[u + 1] - succ_off_[u]);
    }
    NodeId in_degree(NodeId u) const {
        return static_cast<NodeId>(pred_off_[u + 1] - pred_off_[u]);
    }
    std::span<const NodeId> successors(NodeId u) const {
        return {succ_.data() + succ_off_[u], succ_off_[u + 1] - succ_off_[u]};
    }
    std::span<const NodeId> predecessors(NodeId u) const {
        return {pred_.data() + pred_off_[u], pred_off_[u + 1] - pred_off_[u]};
    }
    bool has_arc(NodeId u, NodeId v) const;

    Graph transposed() const;
    // Copy with one extra arc (no-op copy if the arc already exists).
    Graph with_arc(NodeId u, NodeId v) const;
    // All arcs sorted by (source, target).
    std::vector<Arc> arcs() const;

    bool operator==(const Graph&) const = default;

private:
    NodeId n_;
    std::uint64_t loops_;
    std::vector<std::uint64_t> succ_off_, pred_off_;
    std::vector<NodeId> succ_, pred_;
};

// Edge-list format: one "u v" arc per line, '#' starts a comment line, and an
// optional leading "# nodes: N" header fixes the node count (otherwise it is
// 1 + max id). Throws ParseError on malformed lines, ids above the id range,
// or arcs referencing ids >= a declared node count.
Graph load_graph(std::istream& in);
// Reads from the named file, or stdin when `path` is "-".
Graph load_graph_file(const std::string& path);

// Writes the "# nodes: N" header followed by arcs sorted by (source, target),
// so load_graph(serialize(g)) == g.
void serialize(const Graph& g, std::ostream& out);

}  // namespace centrality
