#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "centrality/errors.hpp"
#include "centrality/retrieval.hpp"
#include "doctest.h"

using namespace centrality;
namespace fs = std::filesystem;

namespace {

// Self-deleting corpus directory builder.
struct TempCorpus {
    fs::path dir;

    explicit TempCorpus(const std::string& tag) {
        dir = fs::temp_directory_path() / ("centrality_test_" + tag + "_" +
                                           std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~TempCorpus() { fs::remove_all(dir); }

    void file(const std::string& name, const std::string& contents) const {
        std::ofstream out(dir / name);
        out << contents;
    }
    std::string path() const { return dir.string(); }
};

}  // namespace

TEST_CASE("precision counts positive grades in the top k") {
    std::map<NodeId, double> grades = {{7, 2.0}, {9, 0.0}};
    CHECK(precision_at_k({3, 7}, grades, 10) == doctest::Approx(0.1));
    CHECK(precision_at_k({7, 3}, grades, 1) == doctest::Approx(1.0));
    CHECK(precision_at_k({9, 3}, grades, 2) == 0.0);  // grade zero is not relevant
    CHECK(precision_at_k({}, grades, 10) == 0.0);     // short rankings count misses
}

TEST_CASE("ndcg analytic case: one relevant document at rank two") {
    std::map<NodeId, double> grades = {{7, 1.0}};
    double got = ndcg_at_k({3, 7, 4}, grades, 10);
    CHECK(got == doctest::Approx(1.0 / std::log2(3.0)).epsilon(1e-15));
}

TEST_CASE("ndcg uses linear gain and normalizes by the ideal over all judged docs") {
    std::map<NodeId, double> grades = {{1, 3.0}, {2, 1.0}};
    // Ranking holds only the weaker doc: dcg = 1, idcg = 3 + 1/log2(3).
    double got = ndcg_at_k({2}, grades, 10);
    CHECK(got == doctest::Approx(1.0 / (3.0 + 1.0 / std::log2(3.0))).epsilon(1e-12));
    CHECK(ndcg_at_k({5, 6}, {}, 10) == 0.0);  // no judged docs, ideal is zero
}

TEST_CASE("moving a relevant document up strictly improves ndcg") {
    std::map<NodeId, double> grades = {{4, 2.0}};
    double prev = ndcg_at_k({0, 1, 2, 3, 4}, grades, 10);
    for (std::size_t pos = 3; pos + 1 > 0; --pos) {
        std::vector<NodeId> ranking = {0, 1, 2, 3};
        ranking.insert(ranking.begin() + pos, 4);
        double cur = ndcg_at_k(ranking, grades, 10);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("corpus loading, matching and induced subgraphs") {
    TempCorpus tc("load");
    tc.file("graph.txt", "# nodes: 5\n0 2\n1 2\n3 4\n");
    tc.file("index.tsv", "alpha\t0,1,2\nbeta\t2,3,1\ngamma\t4\n");
    tc.file("qrels.tsv", "q1\t2\t1\nq1\t4\t2\n");

    Corpus c = load_corpus(tc.path());
    CHECK(c.graph.node_count() == 5);
    CHECK(c.postings.at("beta") == std::vector<NodeId>{1, 2, 3});
    CHECK(c.qrels.at("q1").at(4) == 2.0);
    CHECK(c.hosts.empty());

    CHECK(conjunctive_match(c, {"alpha", "beta"}) == std::vector<NodeId>{1, 2});
    CHECK(conjunctive_match(c, {"alpha", "gamma"}).empty());
    CHECK(conjunctive_match(c, {"alpha", "missing"}).empty());
    CHECK(conjunctive_match(c, {}).empty());

    auto ind = induced_subgraph(c.graph, {0, 1, 2});
    CHECK(ind.graph.node_count() == 3);
    CHECK(ind.graph.has_arc(0, 2));
    CHECK(ind.graph.has_arc(1, 2));
    CHECK(ind.graph.arc_count() == 2);
    CHECK(ind.docs == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("loader rejects out-of-range and malformed records") {
    TempCorpus tc("bad");
    tc.file("graph.txt", "# nodes: 3\n0 1\n");
    tc.file("index.tsv", "term\t0,7\n");
    tc.file("qrels.tsv", "q\t0\t1\n");
    CHECK_THROWS_AS(load_corpus(tc.path()), ParseError);

    tc.file("index.tsv", "term\t0,1\n");
    tc.file("qrels.tsv", "q\t0\t-1\n");
    CHECK_THROWS_AS(load_corpus(tc.path()), ParseError);

    tc.file("qrels.tsv", "q\t0\tx\n");
    CHECK_THROWS_AS(load_corpus(tc.path()), ParseError);

    tc.file("qrels.tsv", "q\t0\t1\n");
    fs::remove(tc.dir / "graph.txt");
    CHECK_THROWS_AS(load_corpus(tc.path()), ParseError);
}

TEST_CASE("query files parse ids and space-separated terms") {
    TempCorpus tc("queries");
    tc.file("queries.tsv", "q1\talpha beta\n\nq2\tgamma\n");
    auto qs = load_queries((tc.dir / "queries.tsv").string());
    REQUIRE(qs.size() == 2);
    CHECK(qs[0].id == "q1");
    CHECK(qs[0].terms == std::vector<std::string>{"alpha", "beta"});
    CHECK(qs[1].terms == std::vector<std::string>{"gamma"});
}

namespace {

// Ten spoke docs (0..9) all point at hub docs 10 and 11; the hubs out-rank
// everything on any indegree-flavored measure.
void write_hub_corpus(const TempCorpus& tc) {
    std::string graph = "# nodes: 12\n";
    for (int s = 0; s < 10; ++s) {
        graph += std::to_string(s) + " 10\n";
        if (s < 5) graph += std::to_string(s) + " 11\n";
    }
    tc.file("graph.txt", graph);
    std::string all;
    for (int d = 0; d < 12; ++d) all += (d ? "," : "") + std::to_string(d);
    tc.file("index.tsv", "t\t" + all + "\nrare\t3,10,11\n");
    tc.file("qrels.tsv", "q1\t10\t2\nq1\t11\t1\nq2\t10\t1\n");
    tc.file("queries.tsv", "q1\tt\nq2\tt rare\n");
}

}  // namespace

TEST_CASE("evaluation ranks by the measure and averages over queries") {
    TempCorpus tc("eval");
    write_hub_corpus(tc);
    Corpus c = load_corpus(tc.path());
    auto qs = load_queries((tc.dir / "queries.tsv").string());

    EvalOptions opt;
    opt.k = 2;
    auto run = run_eval(c, qs, "degree", {}, opt);
    REQUIRE(run.rows.size() == 2);
    // q1 matches everything; hubs 10 (indegree 10) and 11 (indegree 5) lead.
    CHECK(run.rows[0].p_at_k == doctest::Approx(1.0));
    CHECK(run.rows[0].ndcg == doctest::Approx(1.0));
    // q2 matches {3, 10, 11}; only doc 10 is relevant and ranks first.
    CHECK(run.rows[1].p_at_k == doctest::Approx(0.5));
    CHECK(run.rows[1].ndcg == doctest::Approx(1.0));
    CHECK(run.mean_p == doctest::Approx(0.75));
    CHECK(run.measure == "degree");
    CHECK(run.null_score_queries == 0);

    auto baseline = run_eval(c, qs, "none", {}, opt);
    // Ascending ids put spokes first; no relevant doc reaches the top two.
    CHECK(baseline.rows[0].p_at_k == 0.0);
    CHECK(baseline.mean_p < run.mean_p);
}

TEST_CASE("an unmatched query contributes zero metrics but stays in the mean") {
    TempCorpus tc("unmatched");
    write_hub_corpus(tc);
    tc.file("queries.tsv", "q1\tt\nq2\tt missing\n");
    Corpus c = load_corpus(tc.path());
    auto qs = load_queries((tc.dir / "queries.tsv").string());
    EvalOptions opt;
    opt.k = 2;
    auto run = run_eval(c, qs, "degree", {}, opt);
    REQUIRE(run.rows.size() == 2);
    CHECK(run.rows[1].empty_match);
    CHECK(run.rows[1].p_at_k == 0.0);
    CHECK(run.mean_p == doctest::Approx(0.5));
}

TEST_CASE("null scores fall back to id order and are counted") {
    TempCorpus tc("null");
    // No arcs at all: every degree score is zero.
    tc.file("graph.txt", "# nodes: 3\n");
    tc.file("index.tsv", "t\t0,1,2\n");
    tc.file("qrels.tsv", "q1\t0\t1\n");
    tc.file("queries.tsv", "q1\tt\n");
    Corpus c = load_corpus(tc.path());
    auto run = run_eval(c, load_queries((tc.dir / "queries.tsv").string()), "degree");
    CHECK(run.null_score_queries == 1);
    CHECK(run.rows[0].null_scores);
    CHECK(run.rows[0].p_at_k == doctest::Approx(0.1));  // doc 0 first by id
}

TEST_CASE("same-host arcs can be dropped before scoring") {
    TempCorpus tc("hosts");
    // Doc 1's only backer shares its host; doc 2's does not. With the arcs
    // intact the tie goes to doc 1 by id; dropping the intra-host arc lets
    // the relevant doc 2 win the top spot.
    tc.file("graph.txt", "# nodes: 4\n0 1\n3 2\n");
    tc.file("index.tsv", "t\t0,1,2,3\n");
    tc.file("qrels.tsv", "q1\t2\t1\n");
    tc.file("hosts.tsv", "0\ta\n1\ta\n2\tb\n3\t\n");
    tc.file("queries.tsv", "q1\tt\n");
    Corpus c = load_corpus(tc.path());
    REQUIRE(c.hosts.size() == 4);
    auto qs = load_queries((tc.dir / "queries.tsv").string());

    EvalOptions opt;
    opt.k = 1;
    auto with_all = run_eval(c, qs, "degree", {}, opt);
    CHECK(with_all.rows[0].p_at_k == 0.0);

    opt.drop_intra_host_arcs = true;
    auto dropped = run_eval(c, qs, "degree", {}, opt);
    // 0->1 goes (both host "a"); 3->2 stays, the empty label never matches.
    CHECK(dropped.rows[0].p_at_k == 1.0);

    Corpus no_hosts = c;
    no_hosts.hosts.clear();
    CHECK_THROWS_AS(run_eval(no_hosts, qs, "degree", {}, opt), InvalidParameter);
}

TEST_CASE("unknown measures are rejected before any query runs") {
    TempCorpus tc("badmeasure");
    write_hub_corpus(tc);
    Corpus c = load_corpus(tc.path());
    auto qs = load_queries((tc.dir / "queries.tsv").string());
    CHECK_THROWS_AS(run_eval(c, qs, "nope"), InvalidParameter);
}
