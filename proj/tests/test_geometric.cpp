#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "centrality/generators.hpp"
#include "centrality/geometric.hpp"
#include "centrality/graph.hpp"
#include "centrality/graph_algorithms.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace centrality;
using testsupport::all_pairs_distances;
using testsupport::random_digraph;
using testsupport::random_strongly_connected;

TEST_CASE("hand-checked values on a three-node path") {
    Graph g = Graph::from_arcs(3, {{0, 1}, {1, 2}});
    auto close = closeness(g).scores;
    auto harm = harmonic(g).scores;
    auto l = lin(g).scores;
    auto deg = indegree_centrality(g).scores;

    CHECK(close[0] == 0.0);  // nothing coreaches node 0
    CHECK(close[1] == 1.0);
    CHECK(close[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    CHECK(harm[0] == 0.0);
    CHECK(harm[1] == 1.0);
    CHECK(harm[2] == 1.5);

    CHECK(l[0] == 1.0);  // zero distance sum falls back to 1
    CHECK(l[1] == 4.0);
    CHECK(l[2] == 3.0);

    CHECK(deg[0] == 0.0);
    CHECK(deg[1] == 1.0);
    CHECK(deg[2] == 1.0);
}

TEST_CASE("isolated node has the defined fallbacks") {
    Graph g = Graph::from_arcs(2, {});
    CHECK(closeness_of(g, 0) == 0.0);
    CHECK(lin_of(g, 0) == 1.0);
    CHECK(harmonic_of(g, 0) == 0.0);
}

TEST_CASE("sweep scores agree with the per-node variants") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_digraph(rng, 2, 18);
        auto close = closeness(g).scores;
        auto harm = harmonic(g).scores;
        auto l = lin(g).scores;
        for (NodeId x = 0; x < g.node_count(); ++x) {
            CHECK(close[x] == closeness_of(g, x));
            CHECK(harm[x] == harmonic_of(g, x));
            CHECK(l[x] == lin_of(g, x));
        }
    }
}

TEST_CASE("scores match a cubic all-pairs distance oracle") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_digraph(rng, 2, 14, true);
        auto d = all_pairs_distances(g);
        NodeId n = g.node_count();
        for (NodeId x = 0; x < n; ++x) {
            std::uint64_t dist_sum = 0;
            NodeId coreach = 0;
            double harm_sum = 0.0;
            for (NodeId y = 0; y < n; ++y) {
                if (d[y][x] == kUnreachable) continue;
                ++coreach;
                dist_sum += d[y][x];
                if (y != x) harm_sum += 1.0 / d[y][x];
            }
            double want_close = dist_sum == 0 ? 0.0 : 1.0 / static_cast<double>(dist_sum);
            double want_lin = dist_sum == 0 ? 1.0
                                            : static_cast<double>(coreach) *
                                                  static_cast<double>(coreach) /
                                                  static_cast<double>(dist_sum);
            CHECK(closeness_of(g, x) == want_close);
            CHECK(lin_of(g, x) == want_lin);
            CHECK(harmonic_of(g, x) == doctest::Approx(harm_sum).epsilon(1e-12));
            CHECK(coreachable_count(g, x) == coreach);
        }
    }
}

TEST_CASE("harmonic is bounded by the indegree relaxation") {
    // Everything beyond the in-neighbors sits at distance two or more.
    std::mt19937_64 rng(13);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_digraph(rng, 2, 20);
        for (NodeId x = 0; x < g.node_count(); ++x) {
            double indeg = g.in_degree(x);
            double others = static_cast<double>(coreachable_count(g, x)) - 1.0 - indeg;
            CHECK(harmonic_of(g, x) <= indeg + std::max(0.0, others) / 2.0 + 1e-12);
        }
    }
}

TEST_CASE("lin equals n^2 times closeness when everything coreaches everything") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_strongly_connected(rng, 3, 20);
        double n2 = static_cast<double>(g.node_count()) * g.node_count();
        for (NodeId x = 0; x < g.node_count(); ++x)
            CHECK(lin_of(g, x) == doctest::Approx(n2 * closeness_of(g, x)).epsilon(1e-14));
    }
}

TEST_CASE("relabeling the nodes permutes the scores") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_digraph(rng, 3, 15);
        NodeId n = g.node_count();
        std::vector<NodeId> perm(n);
        for (NodeId v = 0; v < n; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Arc> relabeled;
        for (auto [u, v] : g.arcs()) relabeled.push_back({perm[u], perm[v]});
        Graph h = Graph::from_arcs(n, std::move(relabeled));
        auto gh = harmonic(g).scores;
        auto hh = harmonic(h).scores;
        auto gc = closeness(g).scores;
        auto hc = closeness(h).scores;
        auto gl = lin(g).scores;
        auto hl = lin(h).scores;
        for (NodeId v = 0; v < n; ++v) {
            // Harmonic sums reciprocals in predecessor order, so relabeling
            // may shift the last ulp; the others accumulate integers.
            CHECK(gh[v] == doctest::Approx(hh[perm[v]]).epsilon(1e-14));
            CHECK(gc[v] == hc[perm[v]]);
            CHECK(gl[v] == hl[perm[v]]);
        }
    }
}

TEST_CASE("thread count does not change geometric scores") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 8; ++i) {
        Graph g = random_digraph(rng, 10, 40);
        CHECK(closeness(g, 1).scores == closeness(g, 4).scores);
        CHECK(harmonic(g, 1).scores == harmonic(g, 4).scores);
        CHECK(lin(g, 1).scores == lin(g, 4).scores);
    }
}

TEST_CASE("clique and cycle nodes score as the closed forms say") {
    for (NodeId k : {3, 5, 8}) {
        for (NodeId p : {3, 6, 9}) {
            Graph g = make_clique_cycle(k, p);
            NodeId cy = k;  // first cycle node
            CHECK(indegree_centrality(g).scores[0] == double(k - 1));
            CHECK(indegree_centrality(g).scores[cy] == 1.0);
            CHECK(closeness_of(g, 0) == 1.0 / (k - 1));
            CHECK(closeness_of(g, cy) == doctest::Approx(2.0 / (double(p) * (p - 1))));
            CHECK(lin_of(g, 0) == doctest::Approx(double(k) * k / (k - 1)));
            CHECK(lin_of(g, cy) == doctest::Approx(2.0 * p / (p - 1)));
            double hp = 0.0;
            for (NodeId d = 1; d < p; ++d) hp += 1.0 / d;
            CHECK(harmonic_of(g, 0) == double(k - 1));
            CHECK(harmonic_of(g, cy) == doctest::Approx(hp).epsilon(1e-14));
        }
    }
}
