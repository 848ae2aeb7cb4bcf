#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "centrality/betweenness.hpp"
#include "centrality/closed_forms.hpp"
#include "centrality/errors.hpp"
#include "centrality/generators.hpp"
#include "centrality/geometric.hpp"
#include "centrality/graph.hpp"
#include "centrality/graph_algorithms.hpp"
#include "centrality/measures.hpp"
#include "centrality/spectral.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace centrality;
using testsupport::l1_normalized;
using testsupport::linf_diff;

TEST_CASE("disjoint generator has the advertised arcs") {
    Graph g = make_clique_cycle(4, 5);
    CHECK(g.node_count() == 9);
    CHECK(g.arc_count() == 4 * 3 + 5);
    for (NodeId a = 0; a < 4; ++a)
        for (NodeId b = 0; b < 4; ++b) CHECK(g.has_arc(a, b) == (a != b));
    for (NodeId i = 0; i < 5; ++i) CHECK(g.has_arc(4 + i, 4 + (i + 1) % 5));
    CHECK(!g.has_arc(0, 4));
    CHECK(weakly_connected_components(g).count() == 2);
}

TEST_CASE("single-node cycle degenerates to a loop") {
    Graph g = make_clique_cycle(2, 1);
    CHECK(g.has_arc(2, 2));
    CHECK(g.loop_count() == 1);
}

TEST_CASE("bridged generator is strongly connected") {
    for (NodeId k : {1, 3, 6})
        for (NodeId p : {1, 4, 8}) {
            Graph g = make_bridged_clique_cycle(k, p);
            CHECK(g.has_arc(0, k));
            CHECK(g.has_arc(k, 0));
            CHECK(strongly_connected_components(g).count() == 1);
        }
}

TEST_CASE("generators reject empty pieces") {
    CHECK_THROWS_AS(make_clique_cycle(0, 3), InvalidParameter);
    CHECK_THROWS_AS(make_clique_cycle(3, 0), InvalidParameter);
    CHECK_THROWS_AS(make_bridged_clique_cycle(0, 1), InvalidParameter);
}

TEST_CASE("closed forms demand the benched range") {
    CHECK_THROWS_AS(clique_cycle_form("degree", 2, 5), InvalidParameter);
    CHECK_THROWS_AS(bridged_form("degree", 5, 2), InvalidParameter);
    CHECK_THROWS_AS(clique_cycle_form("nope", 5, 5), InvalidParameter);
}

TEST_CASE("disjoint-graph forms match direct computation for the exact rows") {
    for (NodeId k : {3, 7})
        for (NodeId p : {4, 9}) {
            Graph g = make_clique_cycle(k, p);
            NodeId cy = k;

            auto deg = clique_cycle_form("degree", k, p);
            CHECK(deg.clique == indegree_centrality(g).scores[0]);
            CHECK(deg.cycle == indegree_centrality(g).scores[cy]);

            auto close = clique_cycle_form("closeness", k, p);
            CHECK(close.clique == closeness_of(g, 0));
            CHECK(close.cycle == doctest::Approx(closeness_of(g, cy)).epsilon(1e-14));

            auto l = clique_cycle_form("lin", k, p);
            CHECK(l.clique == doctest::Approx(lin_of(g, 0)).epsilon(1e-14));
            CHECK(l.cycle == doctest::Approx(lin_of(g, cy)).epsilon(1e-14));

            auto h = clique_cycle_form("harmonic", k, p);
            CHECK(h.clique == harmonic_of(g, 0));
            CHECK(h.cycle == doctest::Approx(harmonic_of(g, cy)).epsilon(1e-14));

            auto b = clique_cycle_form("betweenness", k, p);
            auto bs = betweenness(g).scores;
            CHECK(b.clique == bs[0]);
            CHECK(b.cycle == bs[cy]);
        }
}

TEST_CASE("proportional disjoint-graph forms match after normalization") {
    NodeId k = 5, p = 7;
    Graph g = make_clique_cycle(k, p);
    for (const char* id : {"seeley", "salsa", "pagerank"}) {
        auto f = clique_cycle_form(id, k, p);
        CHECK(f.proportional);
        auto want = l1_normalized(expand_clique_cycle(f, k, p));
        auto got = l1_normalized(compute_measure(g, id).scores);
        CHECK(linf_diff(got, want) < 1e-11);
    }
    auto dom = clique_cycle_form("dominant", k, p);
    auto want = l1_normalized(expand_clique_cycle(dom, k, p));
    CHECK(linf_diff(dominant_eigenvector(g).scores, want) < 1e-9);
}

TEST_CASE("bridged betweenness cells match brute force") {
    // Pins the whole row, in particular the cycle cell k(p-2) + (p-1)(p-2)/2.
    for (auto [k, p] : {std::pair<NodeId, NodeId>{4, 5}, {5, 4}, {3, 6}}) {
        Graph g = make_bridged_clique_cycle(k, p);
        auto brute = betweenness_bruteforce(g).scores;
        auto form = bridged_form("betweenness", k, p);
        auto want = expand_bridged(form, k, p);
        CHECK(linf_diff(brute, want) == 0.0);
        CHECK(form.cycle.at(0) == double(k) * (p - 2) + double(p - 1) * (p - 2) / 2.0);
    }
}

TEST_CASE("bridged geometric cells match direct computation") {
    NodeId k = 6, p = 8;
    Graph g = make_bridged_clique_cycle(k, p);
    for (const char* id : {"degree", "harmonic", "closeness", "lin", "seeley", "salsa"}) {
        auto form = bridged_form(id, k, p);
        auto want = expand_bridged(form, k, p);
        auto got = compute_measure(g, id).scores;
        if (form.proportional) {
            want = l1_normalized(want);
            got = l1_normalized(got);
        }
        CHECK(linf_diff(got, want) < 1e-11);
    }
}

TEST_CASE("bridged katz and pagerank forms solve the same equations the measures do") {
    NodeId k = 5, p = 6;
    Graph g = make_bridged_clique_cycle(k, p);

    FormParams fp;
    fp.beta = 0.07;
    auto kf = bridged_form("katz", k, p, fp);
    SpectralParams sp;
    sp.beta = fp.beta;
    CHECK(linf_diff(katz(g, sp).scores, expand_bridged(kf, k, p)) < 1e-9);

    for (double alpha : {0.25, 0.5, 0.75}) {
        FormParams pf;
        pf.alpha = alpha;
        auto prf = bridged_form("pagerank", k, p, pf);
        SpectralParams psp;
        psp.alpha = alpha;
        CHECK(linf_diff(pagerank(g, psp).scores, expand_bridged(prf, k, p)) < 1e-9);
    }
}

TEST_CASE("bridged spectral forms match after substituting estimated eigenvalues") {
    NodeId k = 6, p = 5;
    Graph g = make_bridged_clique_cycle(k, p);
    auto est = estimate_dominant_eigenvalues(g);

    FormParams fp;
    fp.lambda = est.lambda;
    auto df = bridged_form("dominant", k, p, fp);
    CHECK(linf_diff(dominant_eigenvector(g).scores,
                    l1_normalized(expand_bridged(df, k, p))) < 1e-7);

    fp.mu = est.mu;
    auto hf = bridged_form("hits", k, p, fp);
    CHECK(linf_diff(hits(g).authority.scores, l1_normalized(expand_bridged(hf, k, p))) < 1e-7);
    // The estimated mu must be a root of the quartic the forms are built on.
    CHECK(std::abs(hits_characteristic(est.mu, k)) < 1e-5 * std::pow(est.mu, 3));
}

TEST_CASE("expanded forms have one entry per node") {
    auto f = clique_cycle_form("degree", 4, 6);
    CHECK(expand_clique_cycle(f, 4, 6).size() == 10);
    auto bf = bridged_form("degree", 4, 6);
    auto full = expand_bridged(bf, 4, 6);
    REQUIRE(full.size() == 10);
    CHECK(full[0] == bf.clique_bridge);
    CHECK(full[1] == bf.clique);
    CHECK(full[4] == bf.cycle_bridge);
    CHECK(full[5] == bf.cycle.at(0));
    CHECK(full[9] == bf.cycle.at(4));
}
