#include "centrality/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "centrality/errors.hpp"

namespace centrality {

namespace {

// kUnreachable is reserved, so the largest usable id is 2^32 - 2.
constexpr std::uint64_t kMaxNodeId = 0xfffffffeULL;

}  // namespace

Graph::Graph() : n_(0), loops_(0), succ_off_(1, 0), pred_off_(1, 0) {}

Graph Graph::from_arcs(NodeId n, std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.n_ = n;
    g.succ_off_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.pred_off_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.succ_.reserve(arcs.size());
    g.pred_.resize(arcs.size());

    for (const auto& [u, v] : arcs) {
        if (u >= n || v >= n)
            throw ParseError("arc (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") references a node outside 0.." + std::to_string(n ? n - 1 : 0));
        if (u == v) ++g.loops_;
        ++g.succ_off_[u + 1];
        ++g.pred_off_[v + 1];
    }
    for (NodeId i = 0; i < n; ++i) {
        g.succ_off_[i + 1] += g.succ_off_[i];
        g.pred_off_[i + 1] += g.pred_off_[i];
    }
    std::vector<std::uint64_t> cursor(g.pred_off_.begin(), g.pred_off_.end() - 1);
    for (const auto& [u, v] : arcs) {
        g.succ_.push_back(v);  // arcs are sorted by (u, v), so lists come out sorted
        g.pred_[cursor[v]++] = u;
    }
    return g;
}

bool Graph::has_arc(NodeId u, NodeId v) const {
    if (u >= n_) return false;
    auto s = successors(u);
    return std::binary_search(s.begin(), s.end(), v);
}

Graph Graph::transposed() const {
    std::vector<Arc> rev;
    rev.reserve(succ_.size());
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : successors(u)) rev.emplace_back(v, u);
    return from_arcs(n_, std::move(rev));
}

Graph Graph::with_arc(NodeId u, NodeId v) const {
    auto all = arcs();
    all.emplace_back(u, v);
    NodeId n = std::max({n_, static_cast<NodeId>(u + 1), static_cast<NodeId>(v + 1)});
    return from_arcs(n, std::move(all));
}

std::vector<Arc> Graph::arcs() const {
    std::vector<Arc> out;
    out.reserve(succ_.size());
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : successors(u)) out.emplace_back(u, v);
    return out;
}

namespace {

bool parse_node_id(const std::string& tok, NodeId& out) {
    if (tok.empty()) return false;
    std::uint64_t value = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > kMaxNodeId) throw ParseError("node id " + tok + " out of range");
    }
    out = static_cast<NodeId>(value);
    return true;
}

}  // namespace

Graph load_graph(std::istream& in) {
    std::vector<Arc> arcs;
    std::uint64_t line_no = 0;
    bool have_header = false;
    NodeId declared = 0;
    std::uint64_t max_seen = 0;
    bool any_node = false;
    std::string line;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            // Only a first-line "# nodes: N" is structural; other '#' lines
            // are comments.
            if (line_no == 1) {
                std::istringstream hs(line.substr(start + 1));
                std::string word;
                hs >> word;
                if (word == "nodes:" || word == "nodes") {
                    std::string rest;
                    hs >> rest;
                    if (rest == ":") hs >> rest;
                    NodeId n;
                    try {
                        if (!parse_node_id(rest, n))
                            throw ParseError("malformed node-count header", line_no);
                    } catch (const ParseError&) {
                        throw ParseError("malformed node-count header", line_no);
                    }
                    declared = n;
                    have_header = true;
                }
            }
            continue;
        }
        std::istringstream ls(line);
        std::string a, b, extra;
        ls >> a >> b;
        if (b.empty()) throw ParseError("expected \"source target\"", line_no);
        if (ls >> extra) throw ParseError("trailing tokens after arc", line_no);
        NodeId u, v;
        try {
            if (!parse_node_id(a, u) || !parse_node_id(b, v))
                throw ParseError("node ids must be nonnegative integers", line_no);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), line_no);
        }
        if (have_header && (u >= declared || v >= declared))
            throw ParseError("node id " + std::to_string(std::max(u, v)) +
                                 " exceeds declared node count " + std::to_string(declared),
                             line_no);
        arcs.emplace_back(u, v);
        max_seen = std::max({max_seen, std::uint64_t{u}, std::uint64_t{v}});
        any_node = true;
    }
    if (in.bad()) throw ParseError("read failure");

    NodeId n = have_header ? declared : (any_node ? static_cast<NodeId>(max_seen + 1) : 0);
    return Graph::from_arcs(n, std::move(arcs));
}

Graph load_graph_file(const std::string& path) {
    if (path == "-") return load_graph(std::cin);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return load_graph(f);
}

void serialize(const Graph& g, std::ostream& out) {
    out << "# nodes: " << g.node_count() << "\n";
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.successors(u)) out << u << "\t" << v << "\n";
}

}  // namespace centrality
