// Command-line front end: compute/rank scores, generate benchmark graphs,
// run the axiom report, find density watersheds, evaluate retrieval runs.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 data error,
// 3 convergence failure. Diagnostics go to standard error; results go to
// standard output or, with -o, to a file written atomically.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "centrality/axioms.hpp"
#include "centrality/errors.hpp"
#include "centrality/generators.hpp"
#include "centrality/graph.hpp"
#include "centrality/measures.hpp"
#include "centrality/retrieval.hpp"
#include "centrality/score.hpp"
#include "centrality/spectral.hpp"
#include "centrality/tsv.hpp"

namespace {

using namespace centrality;

struct CommonOpts {
    std::string measure;
    std::string graph_path = "-";
    std::string output;
    double alpha = 0.5;
    double beta = 0.0;
    bool beta_set = false;
    double tol = 1e-12;
    std::uint64_t max_iters = 1000000;
    std::string pref;
    bool normalize = false;
    int threads = 1;
};

std::vector<double> parse_weights(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double w = 0.0;
        try {
            w = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InvalidParameter("bad preference weight '" + item + "'");
        }
        if (used != item.size())
            throw InvalidParameter("bad preference weight '" + item + "'");
        out.push_back(w);
    }
    if (out.empty()) throw InvalidParameter("empty preference list");
    return out;
}

SpectralParams spectral_params(const CommonOpts& o) {
    SpectralParams p;
    p.alpha = o.alpha;
    if (o.beta_set) p.beta = o.beta;
    p.tol = o.tol;
    p.max_iters = o.max_iters;
    p.normalize_output = o.normalize;
    if (!o.pref.empty()) p.preference = parse_weights(o.pref);
    return p;
}

void require_measure(const std::string& id) {
    if (!is_measure_id(id)) throw InvalidParameter("unknown measure '" + id + "'");
}

void emit(const std::string& output_path, const std::string& contents) {
    if (output_path.empty())
        std::cout << contents;
    else
        write_file_atomic(output_path, contents);
}

void add_spectral_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--alpha", o.alpha, "damping factor in [0, 1)");
    auto* b = cmd->add_option("--beta", o.beta, "path attenuation (default 1/(2*lambda))");
    cmd->callback([&o, b] { o.beta_set = b->count() > 0; });
    cmd->add_option("--tol", o.tol, "iteration stopping tolerance");
    cmd->add_option("--max-iters", o.max_iters, "iteration cap");
    cmd->add_option("--pref", o.pref, "comma-separated preference weights");
    cmd->add_flag("--normalize", o.normalize, "scale scores to sum 1 where optional");
}

int run_scores(const CommonOpts& o, bool ranking) {
    require_measure(o.measure);
    if (o.threads < 1) throw InvalidParameter("threads must be at least 1");
    Graph g = load_graph_file(o.graph_path);
    ScoreVector s = compute_measure(g, o.measure, spectral_params(o), o.threads);
    std::ostringstream out;
    if (ranking)
        write_ranking_tsv(out, s);
    else
        write_scores_tsv(out, s);
    emit(o.output, out.str());
    return 0;
}

struct GenOpts {
    std::string family;
    NodeId k = 0;
    NodeId p = 0;
    std::string output;
};

int run_gen(const GenOpts& o) {
    Graph g = [&] {
        if (o.family == "S") {
            if (o.k < 1 || o.p < 1) throw InvalidParameter("family S needs k >= 1 and p >= 1");
            return make_clique_cycle(o.k, o.p);
        }
        if (o.family == "D") {
            if (o.k < 3 || o.p < 3) throw InvalidParameter("family D needs k >= 3 and p >= 3");
            return make_bridged_clique_cycle(o.k, o.p);
        }
        throw InvalidParameter("family must be S or D");
    }();
    std::ostringstream out;
    serialize(g, out);
    emit(o.output, out.str());
    return 0;
}

struct AxiomOpts {
    std::string measure;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::string output;
};

int run_axioms(const AxiomOpts& o) {
    AxiomBenchConfig cfg;
    cfg.monotonicity_trials = o.trials;
    cfg.seed = o.seed;
    std::vector<AxiomCell> cells;
    if (o.measure.empty()) {
        cells = axiom_matrix(cfg);
    } else {
        require_measure(o.measure);
        cells = axiom_matrix_for(o.measure, cfg);
    }
    std::ostringstream out;
    out << "# trials: " << o.trials << "\n# seed: " << o.seed << "\n";
    out << "# columns: measure\taxiom\tverdict\twitness\n";
    for (const auto& c : cells)
        out << c.measure << "\t" << c.axiom << "\t" << c.verdict << "\t" << c.witness << "\n";
    emit(o.output, out.str());
    return 0;
}

struct WatershedOpts {
    std::string measure;
    NodeId p = 0;
    NodeId k_max = 1000;
    std::string output;
};

int run_watershed(const WatershedOpts& o) {
    require_measure(o.measure);
    if (o.p < 3) throw InvalidParameter("p must be at least 3");
    auto k = watershed(o.measure, o.p, o.k_max);
    std::ostringstream out;
    out << "# measure: " << o.measure << "\n# p: " << o.p << "\n";
    out << (k ? std::to_string(*k) : std::string("none")) << "\n";
    emit(o.output, out.str());
    return 0;
}

struct EvalOpts2 {
    std::string corpus_dir;
    std::string queries_path;
    std::string measure = "none";
    std::size_t k = 10;
    bool drop_intra_host = false;
    bool per_query = false;
    std::string output;
    CommonOpts common;
};

int run_retrieval(const EvalOpts2& o) {
    Corpus corpus = load_corpus(o.corpus_dir);
    std::vector<Query> queries = load_queries(o.queries_path);
    EvalOptions opts;
    opts.k = o.k;
    opts.drop_intra_host_arcs = o.drop_intra_host;
    EvalRun run = run_eval(corpus, queries, o.measure, spectral_params(o.common), opts);
    std::ostringstream out;
    out << "# k: " << run.k << "\n# queries: " << run.rows.size() << "\n";
    out << "# null-score queries: " << run.null_score_queries << "\n";
    out << "# ties: broken by ascending doc id\n";
    if (o.per_query)
        for (const auto& r : run.rows)
            out << "query\t" << r.query << "\t" << format_score(r.ndcg) << "\t"
                << format_score(r.p_at_k) << "\t" << r.matched << "\n";
    out << "# columns: measure\tndcg@" << run.k << "\tp@" << run.k << "\n";
    out << run.measure << "\t" << format_score(run.mean_ndcg) << "\t"
        << format_score(run.mean_p) << "\n";
    emit(o.output, out.str());
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"centrality scores, axiom checks and retrieval evaluation for directed graphs"};
    app.require_subcommand(1);

    CommonOpts compute_opts;
    auto* compute = app.add_subcommand("compute", "score every node with one measure");
    compute->add_option("-m,--measure", compute_opts.measure, "measure id")->required();
    compute->add_option("-g,--graph", compute_opts.graph_path, "arc-list file, - for stdin");
    compute->add_option("-o,--output", compute_opts.output, "output file (atomic write)");
    compute->add_option("--threads", compute_opts.threads, "worker threads");
    add_spectral_flags(compute, compute_opts);

    CommonOpts rank_opts;
    auto* rank = app.add_subcommand("rank", "node ids by descending score, ties by id");
    rank->add_option("-m,--measure", rank_opts.measure, "measure id")->required();
    rank->add_option("-g,--graph", rank_opts.graph_path, "arc-list file, - for stdin");
    rank->add_option("-o,--output", rank_opts.output, "output file (atomic write)");
    rank->add_option("--threads", rank_opts.threads, "worker threads");
    add_spectral_flags(rank, rank_opts);

    GenOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "emit a benchmark graph");
    gen->add_option("-f,--family", gen_opts.family,
                    "S = disjoint clique+cycle, D = bridged clique+cycle")
        ->required();
    gen->add_option("-k", gen_opts.k, "clique size")->required();
    gen->add_option("-p", gen_opts.p, "cycle size")->required();
    gen->add_option("-o,--output", gen_opts.output, "output file (atomic write)");

    AxiomOpts axiom_opts;
    auto* axioms = app.add_subcommand("axioms", "size/density/monotonicity verdict report");
    axioms->add_option("-m,--measure", axiom_opts.measure, "restrict to one measure");
    axioms->add_option("--trials", axiom_opts.trials, "random monotonicity trials");
    axioms->add_option("--seed", axiom_opts.seed, "trial generator seed");
    axioms->add_option("-o,--output", axiom_opts.output, "output file (atomic write)");

    WatershedOpts ws_opts;
    auto* ws = app.add_subcommand("watershed", "least clique size beating the cycle bridge");
    ws->add_option("-m,--measure", ws_opts.measure, "measure id")->required();
    ws->add_option("-p", ws_opts.p, "cycle size")->required();
    ws->add_option("--k-max", ws_opts.k_max, "search bound");
    ws->add_option("-o,--output", ws_opts.output, "output file (atomic write)");

    EvalOpts2 eval_opts;
    auto* eval = app.add_subcommand("eval", "retrieval metrics over a corpus directory");
    eval->add_option("-c,--corpus", eval_opts.corpus_dir, "corpus directory")->required();
    eval->add_option("-q,--queries", eval_opts.queries_path, "query file")->required();
    eval->add_option("-m,--measure", eval_opts.measure, "measure id or 'none'");
    eval->add_option("-k", eval_opts.k, "metric cutoff");
    eval->add_flag("--drop-intra-host", eval_opts.drop_intra_host,
                   "ignore arcs between same-host docs");
    eval->add_flag("--per-query", eval_opts.per_query, "emit one row per query");
    eval->add_option("-o,--output", eval_opts.output, "output file (atomic write)");
    add_spectral_flags(eval, eval_opts.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*compute) return run_scores(compute_opts, false);
    if (*rank) return run_scores(rank_opts, true);
    if (*gen) return run_gen(gen_opts);
    if (*axioms) return run_axioms(axiom_opts);
    if (*ws) return run_watershed(ws_opts);
    if (*eval) return run_retrieval(eval_opts);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const InvalidParameter& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
