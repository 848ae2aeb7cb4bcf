#include "centrality/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "centrality/errors.hpp"
#include "centrality/measures.hpp"

namespace centrality {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#';
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

NodeId parse_doc(const std::string& token, NodeId n, std::uint64_t lineno) {
    if (token.empty()) throw ParseError("empty document id", lineno);
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') throw ParseError("malformed document id '" + token + "'", lineno);
        value = value * 10 + (c - '0');
        if (value >= n) throw ParseError("document id " + token + " out of range", lineno);
    }
    return static_cast<NodeId>(value);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

double log2_discount(std::size_t rank) { return std::log2(static_cast<double>(rank) + 1.0); }

}  // namespace

Corpus load_corpus(const std::string& dir) {
    Corpus corpus;
    {
        auto in = open_or_throw(dir + "/graph.txt");
        corpus.graph = load_graph(in);
    }
    const NodeId n = corpus.graph.node_count();

    {
        auto in = open_or_throw(dir + "/index.tsv");
        std::string line;
        std::uint64_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = strip_cr(line);
            if (skippable(line)) continue;
            auto cols = split(line, '\t');
            if (cols.size() != 2 || cols[0].empty())
                throw ParseError("expected 'term<TAB>doc,doc,...'", lineno);
            auto& docs = corpus.postings[cols[0]];
            for (const auto& tok : split(cols[1], ','))
                docs.push_back(parse_doc(tok, n, lineno));
            std::sort(docs.begin(), docs.end());
            docs.erase(std::unique(docs.begin(), docs.end()), docs.end());
        }
    }

    {
        auto in = open_or_throw(dir + "/qrels.tsv");
        std::string line;
        std::uint64_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = strip_cr(line);
            if (skippable(line)) continue;
            auto cols = split(line, '\t');
            if (cols.size() != 3 || cols[0].empty())
                throw ParseError("expected 'query<TAB>doc<TAB>grade'", lineno);
            NodeId doc = parse_doc(cols[1], n, lineno);
            double grade = 0.0;
            try {
                std::size_t used = 0;
                grade = std::stod(cols[2], &used);
                if (used != cols[2].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("malformed grade '" + cols[2] + "'", lineno);
            }
            if (grade < 0) throw ParseError("negative grade", lineno);
            corpus.qrels[cols[0]][doc] = grade;
        }
    }

    std::ifstream hosts(dir + "/hosts.tsv");
    if (hosts) {
        corpus.hosts.assign(n, "");
        std::string line;
        std::uint64_t lineno = 0;
        while (std::getline(hosts, line)) {
            ++lineno;
            line = strip_cr(line);
            if (skippable(line)) continue;
            auto cols = split(line, '\t');
            if (cols.size() != 2) throw ParseError("expected 'doc<TAB>label'", lineno);
            corpus.hosts[parse_doc(cols[0], n, lineno)] = cols[1];
        }
    }
    return corpus;
}

std::vector<Query> load_queries(const std::string& path) {
    auto in = open_or_throw(path);
    std::vector<Query> queries;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (skippable(line)) continue;
        auto cols = split(line, '\t');
        if (cols.size() != 2 || cols[0].empty())
            throw ParseError("expected 'id<TAB>term term ...'", lineno);
        Query q;
        q.id = cols[0];
        std::istringstream terms(cols[1]);
        std::string term;
        while (terms >> term) q.terms.push_back(term);
        if (q.terms.empty()) throw ParseError("query without terms", lineno);
        queries.push_back(std::move(q));
    }
    return queries;
}

std::vector<NodeId> conjunctive_match(const Corpus& corpus,
                                      const std::vector<std::string>& terms) {
    if (terms.empty()) return {};
    std::vector<NodeId> acc;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto it = corpus.postings.find(terms[i]);
        if (it == corpus.postings.end()) return {};
        if (i == 0) {
            acc = it->second;
        } else {
            std::vector<NodeId> next;
            std::set_intersection(acc.begin(), acc.end(), it->second.begin(), it->second.end(),
                                  std::back_inserter(next));
            acc = std::move(next);
        }
        if (acc.empty()) return {};
    }
    return acc;
}

Induced induced_subgraph(const Graph& g, const std::vector<NodeId>& docs) {
    Induced out;
    out.docs = docs;
    std::sort(out.docs.begin(), out.docs.end());
    out.docs.erase(std::unique(out.docs.begin(), out.docs.end()), out.docs.end());
    auto local = [&](NodeId corpus_id) {
        auto it = std::lower_bound(out.docs.begin(), out.docs.end(), corpus_id);
        return it != out.docs.end() && *it == corpus_id
                   ? static_cast<NodeId>(it - out.docs.begin())
                   : static_cast<NodeId>(-1);
    };
    std::vector<Arc> arcs;
    for (NodeId lu = 0; lu < out.docs.size(); ++lu)
        for (NodeId v : g.successors(out.docs[lu])) {
            NodeId lv = local(v);
            if (lv != static_cast<NodeId>(-1)) arcs.push_back({lu, lv});
        }
    out.graph = Graph::from_arcs(static_cast<NodeId>(out.docs.size()), std::move(arcs));
    return out;
}

double precision_at_k(const std::vector<NodeId>& ranking,
                      const std::map<NodeId, double>& grades, std::size_t k) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < std::min(k, ranking.size()); ++i) {
        auto it = grades.find(ranking[i]);
        if (it != grades.end() && it->second > 0) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(k);
}

double ndcg_at_k(const std::vector<NodeId>& ranking, const std::map<NodeId, double>& grades,
                 std::size_t k) {
    double dcg = 0.0;
    for (std::size_t i = 0; i < std::min(k, ranking.size()); ++i) {
        auto it = grades.find(ranking[i]);
        if (it != grades.end()) dcg += it->second / log2_discount(i + 1);
    }
    std::vector<double> ideal;
    ideal.reserve(grades.size());
    for (const auto& [doc, grade] : grades) ideal.push_back(grade);
    std::sort(ideal.begin(), ideal.end(), std::greater<>());
    double idcg = 0.0;
    for (std::size_t i = 0; i < std::min(k, ideal.size()); ++i)
        idcg += ideal[i] / log2_discount(i + 1);
    return idcg == 0.0 ? 0.0 : dcg / idcg;
}

EvalRun run_eval(const Corpus& corpus, const std::vector<Query>& queries,
                 const std::string& measure, const SpectralParams& params,
                 const EvalOptions& options) {
    if (measure != "none" && !is_measure_id(measure))
        throw InvalidParameter("unknown measure id '" + measure + "'");

    const Graph* graph = &corpus.graph;
    Graph filtered;
    if (options.drop_intra_host_arcs) {
        if (corpus.hosts.empty())
            throw InvalidParameter("corpus has no host labels to filter on");
        std::vector<Arc> arcs;
        for (const Arc& a : corpus.graph.arcs()) {
            const auto& hu = corpus.hosts[a.first];
            if (hu.empty() || hu != corpus.hosts[a.second]) arcs.push_back(a);
        }
        filtered = Graph::from_arcs(corpus.graph.node_count(), std::move(arcs));
        graph = &filtered;
    }

    static const std::map<NodeId, double> no_grades;
    EvalRun run;
    run.measure = measure;
    run.k = options.k;
    for (const auto& q : queries) {
        QueryResult row;
        row.query = q.id;
        auto matched = conjunctive_match(corpus, q.terms);
        row.matched = matched.size();
        if (matched.empty()) {
            row.empty_match = true;
            run.rows.push_back(std::move(row));
            continue;
        }
        std::vector<NodeId> ranking;
        if (measure == "none") {
            ranking = matched;
        } else {
            auto induced = induced_subgraph(*graph, matched);
            auto scores = compute_measure(induced.graph, measure, params);
            row.null_scores = std::all_of(scores.scores.begin(), scores.scores.end(),
                                          [](double s) { return s == 0.0; });
            if (row.null_scores) ++run.null_score_queries;
            for (NodeId local : rank_by(scores)) ranking.push_back(induced.docs[local]);
        }
        auto it = corpus.qrels.find(q.id);
        const auto& grades = it != corpus.qrels.end() ? it->second : no_grades;
        row.p_at_k = precision_at_k(ranking, grades, options.k);
        row.ndcg = ndcg_at_k(ranking, grades, options.k);
        run.rows.push_back(std::move(row));
    }
    if (!run.rows.empty()) {
        for (const auto& row : run.rows) {
            run.mean_p += row.p_at_k;
            run.mean_ndcg += row.ndcg;
        }
        run.mean_p /= static_cast<double>(run.rows.size());
        run.mean_ndcg /= static_cast<double>(run.rows.size());
    }
    return run;
}

}  // namespace centrality
