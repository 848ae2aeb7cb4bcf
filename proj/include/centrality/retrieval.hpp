#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "centrality/graph.hpp"
#include "centrality/score.hpp"
#include "centrality/spectral.hpp"

namespace centrality {

struct Corpus {
    Graph graph;
    std::map<std::string, std::vector<NodeId>> postings;        // term -> sorted docs
    std::map<std::string, std::map<NodeId, double>> qrels;      // query -> doc -> grade
    std::vector<std::string> hosts;                             // per-doc label; empty if absent
};

// Reads graph.txt, index.tsv ("term<TAB>doc,doc,..."), qrels.tsv
// ("query<TAB>doc<TAB>grade") and, when present, hosts.tsv ("doc<TAB>label")
// from the directory.
Corpus load_corpus(const std::string& dir);

struct Query {
    std::string id;
    std::vector<std::string> terms;
};
// "id<TAB>term term ..." lines.
std::vector<Query> load_queries(const std::string& path);

// Sorted docs carrying every query term (intersection of postings).
std::vector<NodeId> conjunctive_match(const Corpus& corpus, const std::vector<std::string>& terms);

struct Induced {
    Graph graph;
    std::vector<NodeId> docs;  // local id -> corpus id, ascending
};
// Subgraph on `docs` (sorted, deduplicated), ids compacted in order.
Induced induced_subgraph(const Graph& g, const std::vector<NodeId>& docs);

// Fraction of the top k ranks holding a doc with grade > 0; absent qrels
// entries count as grade 0, short rankings as misses.
double precision_at_k(const std::vector<NodeId>& ranking,
                      const std::map<NodeId, double>& grades, std::size_t k);

// DCG with linear gain and 1/log2(rank+1) discount (rank from 1), divided by
// the ideal DCG over all judged docs of the query; 0 when the ideal is 0.
double ndcg_at_k(const std::vector<NodeId>& ranking,
                 const std::map<NodeId, double>& grades, std::size_t k);

struct QueryResult {
    std::string query;
    double p_at_k = 0.0;
    double ndcg = 0.0;
    std::size_t matched = 0;
    bool empty_match = false;  // no doc carries all terms; metrics are 0
    bool null_scores = false;  // every matched doc scored 0
};

struct EvalRun {
    std::string measure;
    std::size_t k = 10;
    std::vector<QueryResult> rows;
    double mean_p = 0.0;
    double mean_ndcg = 0.0;
    std::uint64_t null_score_queries = 0;
};

struct EvalOptions {
    std::size_t k = 10;
    bool drop_intra_host_arcs = false;  // ignore arcs between same-host docs
};

// Ranks each query's match set by the measure (measure "none" keeps ascending
// doc-id order) and averages the metrics over all queries.
EvalRun run_eval(const Corpus& corpus, const std::vector<Query>& queries,
                 const std::string& measure, const SpectralParams& params = {},
                 const EvalOptions& options = {});

}  // namespace centrality
