#include "centrality/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "centrality/errors.hpp"
#include "centrality/generators.hpp"
#include "centrality/geometric.hpp"
#include "centrality/measures.hpp"
#include "centrality/naive.hpp"
#include "centrality/spectral.hpp"

namespace centrality {

const std::vector<std::string>& axiom_measures() {
    static const std::vector<std::string> ids = {
        "degree", "harmonic", "closeness", "lin",  "betweenness", "dominant",
        "seeley", "katz",     "pagerank",  "hits", "salsa",
    };
    return ids;
}

bool strictly_greater(double a, double b, double rel_tol) {
    return a > b && a - b > rel_tol * std::max(std::abs(a), std::abs(b));
}

std::string to_string(SizeVerdict v) {
    switch (v) {
        case SizeVerdict::Yes: return "yes";
        case SizeVerdict::OnlyK: return "only k";
        case SizeVerdict::OnlyP: return "only p";
        default: return "no";
    }
}

namespace {

bool has_per_node_shortcut(const std::string& m) {
    return m == "degree" || m == "closeness" || m == "lin" || m == "harmonic" || m == "beta" ||
           m == "indegree-co" || m == "indegree-weak" || m == "beta-co" || m == "beta-weak";
}

double per_node_score(const std::string& m, const Graph& g, NodeId x) {
    if (m == "degree") return g.in_degree(x);
    if (m == "closeness") return closeness_of(g, x);
    if (m == "lin") return lin_of(g, x);
    if (m == "harmonic") return harmonic_of(g, x);
    if (m == "beta") return beta_measure_of(g, x);
    if (m == "indegree-co")
        return product_measure_of(g, x, DensityTerm::Indegree, SizeTerm::Coreachable);
    if (m == "indegree-weak")
        return product_measure_of(g, x, DensityTerm::Indegree, SizeTerm::WeaklyReachable);
    if (m == "beta-co") return product_measure_of(g, x, DensityTerm::Beta, SizeTerm::Coreachable);
    return product_measure_of(g, x, DensityTerm::Beta, SizeTerm::WeaklyReachable);
}

int probe_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

PairScores scores_at(const std::string& measure, const Graph& g, NodeId a, NodeId b) {
    if (has_per_node_shortcut(measure))
        return {per_node_score(measure, g, a), per_node_score(measure, g, b)};
    // All-pairs probes on big cliques dominate the size scan; betweenness on
    // these graphs sums small integers, so thread count cannot change values.
    int threads = measure == "betweenness" ? probe_threads() : 1;
    auto sv = compute_measure(g, measure, {}, threads);
    return {sv.scores[a], sv.scores[b]};
}

// Dense low range, then doubling, with the bound always included. The dense
// prefix pins small thresholds exactly; the tail gives binary-search windows.
std::vector<NodeId> sample_points(NodeId bound) {
    std::vector<NodeId> pts;
    for (NodeId v = 3; v <= std::min<NodeId>(16, bound); ++v) pts.push_back(v);
    for (NodeId v = 32; v < bound; v *= 2) pts.push_back(v);
    if (bound > 16) pts.push_back(bound);
    return pts;
}

struct BranchSearch {
    bool holds = false;
    NodeId threshold = 0;
    std::string note;
};

// Finds the least value t <= bound such that `pred` holds at t and at every
// spot-check beyond it (t+1, t+2, t+7, the remaining sample points and the
// bound, capped at confirm_cap). A later failure restarts the scan past the
// failing point, so predicates true only on an initial segment end up "not
// found".
template <typename Pred>
BranchSearch find_least_holding(Pred&& raw_pred, NodeId bound, NodeId confirm_cap) {
    std::map<NodeId, bool> memo;
    auto pred = [&](NodeId v) {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        bool r = raw_pred(v);
        memo.emplace(v, r);
        return r;
    };

    const auto points = sample_points(bound);
    std::size_t start = 0;
    NodeId floor = 3;
    while (start < points.size()) {
        std::size_t found = points.size();
        for (std::size_t i = start; i < points.size(); ++i)
            if (pred(points[i])) {
                found = i;
                break;
            }
        if (found == points.size()) return {false, 0, "no threshold within bound"};

        NodeId lo = std::max(floor, found == 0 ? NodeId{3} : points[found - 1] + 1);
        NodeId hi = points[found];
        while (lo < hi) {
            NodeId mid = lo + (hi - lo) / 2;
            if (pred(mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        NodeId t = lo;

        std::set<NodeId> confirms;
        for (NodeId off : {NodeId{0}, NodeId{1}, NodeId{2}, NodeId{7}})
            if (t + off <= bound && t + off <= confirm_cap) confirms.insert(t + off);
        for (NodeId v : points)
            if (v > t && v <= confirm_cap) confirms.insert(v);
        if (bound <= confirm_cap) confirms.insert(bound);

        NodeId failed = 0;
        bool ok = true;
        for (NodeId v : confirms)
            if (!pred(v)) {
                ok = false;
                failed = v;
                break;
            }
        if (ok) return {true, t, ""};
        floor = failed + 1;
        start = points.size();
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] > failed) {
                start = i;
                break;
            }
    }
    return {false, 0, "holds only on an initial segment"};
}

std::string format_thresholds(const std::map<NodeId, NodeId>& m) {
    std::ostringstream os;
    bool first = true;
    for (auto [key, val] : m) {
        os << (first ? "" : ", ") << key << "->" << val;
        first = false;
    }
    return os.str();
}

Graph clique_plus_two(NodeId k) {
    std::vector<Arc> arcs;
    for (NodeId u = 0; u < k; ++u)
        for (NodeId v = 0; v < k; ++v)
            if (u != v) arcs.push_back({u, v});
    return Graph::from_arcs(k + 2, std::move(arcs));
}

// Seeded generator for the monotonicity trials: node count in [2, 40], arc
// count uniform below complete, so an absent non-loop pair always exists.
struct TrialSampler {
    std::mt19937_64 rng;
    explicit TrialSampler(std::uint64_t seed) : rng(seed) {}

    Graph next_graph() {
        std::uniform_int_distribution<NodeId> nd(2, 40);
        NodeId n = nd(rng);
        std::uint64_t max_arcs = static_cast<std::uint64_t>(n) * (n - 1);
        std::uniform_int_distribution<std::uint64_t> md(0, max_arcs - 1);
        std::uint64_t m = md(rng);
        std::set<Arc> arcs;
        std::uniform_int_distribution<NodeId> node(0, n - 1);
        while (arcs.size() < m) {
            NodeId u = node(rng), v = node(rng);
            if (u != v) arcs.insert({u, v});
        }
        return Graph::from_arcs(n, {arcs.begin(), arcs.end()});
    }

    Arc absent_arc(const Graph& g) {
        std::vector<Arc> absent;
        for (NodeId u = 0; u < g.node_count(); ++u)
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (u != v && !g.has_arc(u, v)) absent.push_back({u, v});
        std::uniform_int_distribution<std::size_t> pick(0, absent.size() - 1);
        return absent[pick(rng)];
    }
};

// lambda <= min(max outdegree, max indegree) for a nonnegative matrix; used
// to pin a provably convergent Katz beta without running an eigensolver.
double degree_bound(const Graph& g) {
    NodeId max_out = 0, max_in = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        max_out = std::max(max_out, g.out_degree(u));
        max_in = std::max(max_in, g.in_degree(u));
    }
    return std::max<NodeId>(1, std::min(max_out, max_in));
}

double trial_score(const std::string& measure, const Graph& g, NodeId x,
                   const SpectralParams& params) {
    if (has_per_node_shortcut(measure)) return per_node_score(measure, g, x);
    return compute_measure(g, measure, params).scores[x];
}

bool has_trial_protocol(const std::string& m) {
    return has_per_node_shortcut(m) || m == "katz" || m == "pagerank";
}

}  // namespace

PairScores scores_on_clique_cycle(const std::string& measure, NodeId k, NodeId p) {
    Graph g = make_clique_cycle(k, p);
    return scores_at(measure, g, 0, k);
}

PairScores scores_on_bridges(const std::string& measure, NodeId k, NodeId p) {
    Graph g = make_bridged_clique_cycle(k, p);
    return scores_at(measure, g, 0, k);
}

SizeAxiomResult check_size_axiom(const std::string& measure, const SizeSearchConfig& cfg) {
    SizeAxiomResult r;
    bool p_branch = true, k_branch = true;
    std::ostringstream note;

    for (NodeId k : cfg.ks) {
        auto out = find_least_holding(
            [&](NodeId p) {
                auto s = scores_on_clique_cycle(measure, k, p);
                return strictly_greater(s.cycle, s.clique);
            },
            cfg.p_bound, cfg.p_confirm_cap);
        if (!out.holds) {
            p_branch = false;
            note << "cycle side fails at k=" << k << " (" << out.note << "); ";
            break;
        }
        r.p_threshold[k] = out.threshold;
    }

    for (NodeId p : cfg.ps) {
        auto out = find_least_holding(
            [&](NodeId k) {
                auto s = scores_on_clique_cycle(measure, k, p);
                return strictly_greater(s.clique, s.cycle);
            },
            cfg.k_bound, cfg.p_confirm_cap);
        if (!out.holds) {
            k_branch = false;
            note << "clique side fails at p=" << p << " (" << out.note << "); ";
            break;
        }
        r.k_threshold[p] = out.threshold;
    }

    if (p_branch && k_branch)
        r.verdict = SizeVerdict::Yes;
    else if (k_branch)
        r.verdict = SizeVerdict::OnlyK;
    else if (p_branch)
        r.verdict = SizeVerdict::OnlyP;
    else
        r.verdict = SizeVerdict::No;

    if (!r.p_threshold.empty()) note << "P: " << format_thresholds(r.p_threshold) << "; ";
    if (!r.k_threshold.empty()) note << "K: " << format_thresholds(r.k_threshold) << "; ";
    r.witness = note.str();
    return r;
}

DensityAxiomResult check_density_axiom(const std::string& measure, NodeId k_min, NodeId k_max) {
    for (NodeId k = k_min; k <= k_max; ++k) {
        auto s = scores_on_bridges(measure, k, k);
        if (!strictly_greater(s.clique, s.cycle)) {
            std::ostringstream os;
            os << "k=p=" << k << ": x=" << s.clique << " vs y=" << s.cycle;
            return {false, os.str()};
        }
    }
    std::ostringstream os;
    os << "x > y for every k=p in [" << k_min << ", " << k_max << "]";
    return {true, os.str()};
}

std::optional<NodeId> watershed(const std::string& measure, NodeId p, NodeId k_max) {
    for (NodeId k = 3; k <= k_max; ++k) {
        auto s = scores_on_bridges(measure, k, p);
        if (strictly_greater(s.clique, s.cycle)) return k;
    }
    return std::nullopt;
}

const std::vector<MonotonicityFixture>& monotonicity_fixtures() {
    static const std::vector<MonotonicityFixture> fixtures = [] {
        std::vector<MonotonicityFixture> f;

        f.push_back({"closeness", "one incoming arc, then a second",
                     Graph::from_arcs(3, {{1, 0}}), {2, 0}, 0, 1.0, 0.5});

        f.push_back({"lin",
                     "four spokes into the node, then a three-node tail attached",
                     Graph::from_arcs(9, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {6, 5}, {7, 6}, {8, 6}}),
                     {5, 0},
                     0,
                     25.0 / 4.0,
                     81.0 / 13.0});

        f.push_back({"betweenness", "two isolated nodes gaining their only arc",
                     Graph::from_arcs(2, {}), {0, 1}, 1, 0.0, 0.0});

        Graph clique4 = clique_plus_two(4);
        for (const char* m : {"dominant", "seeley", "hits"})
            f.push_back({m, "4-clique plus two isolated nodes, arc between the strays",
                         clique4, {4, 5}, 5, 0.0, 0.0});

        f.push_back({"salsa", "six nodes where the watched node shares no predecessor yet",
                     Graph::from_arcs(6, {{3, 1}, {0, 2}, {4, 2}, {5, 2}}), {0, 1}, 1, 1.0 / 6.0,
                     2.0 / 15.0});
        return f;
    }();
    return fixtures;
}

MonotonicityResult check_score_monotonicity(const std::string& measure, std::uint64_t trials,
                                            std::uint64_t seed) {
    for (const auto& fx : monotonicity_fixtures()) {
        if (fx.measure != measure) continue;
        SpectralParams tight;
        tight.tol = 1e-13;
        double before = trial_score(measure, fx.before, fx.node, tight);
        double after =
            trial_score(measure, fx.before.with_arc(fx.added.first, fx.added.second), fx.node,
                        tight);
        auto close = [](double got, double want) {
            return std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want));
        };
        if (!close(before, fx.expected_before) || !close(after, fx.expected_after))
            throw std::logic_error("fixture replay diverged for " + measure + " (" + fx.label +
                                   ")");
        MonotonicityResult r;
        r.satisfied = fx.expected_after > fx.expected_before;
        std::ostringstream os;
        os << fx.label << ": " << fx.expected_before << " -> " << fx.expected_after;
        r.witness = os.str();
        return r;
    }

    if (!has_trial_protocol(measure))
        throw InvalidParameter("no monotonicity protocol for measure '" + measure + "'");

    TrialSampler sampler(seed);
    MonotonicityResult r;
    r.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Graph before = sampler.next_graph();
        Arc arc = sampler.absent_arc(before);
        Graph after = before.with_arc(arc.first, arc.second);
        SpectralParams params;
        if (measure == "katz") params.beta = 1.0 / (2.0 * degree_bound(after));
        double sb = trial_score(measure, before, arc.second, params);
        double sa = trial_score(measure, after, arc.second, params);
        if (!strictly_greater(sa, sb)) {
            std::ostringstream os;
            os << "trial " << t << ": n=" << before.node_count() << ", arc " << arc.first << "->"
               << arc.second << ", score " << sb << " -> " << sa;
            r.witness = os.str();
            return r;
        }
    }
    r.satisfied = true;
    std::ostringstream os;
    os << trials << " random arc additions, strict increase every time";
    r.witness = os.str();
    return r;
}

std::vector<AxiomCell> axiom_matrix_for(const std::string& measure, const AxiomBenchConfig& cfg) {
    AxiomBenchConfig local = cfg;
    if (measure == "betweenness") {
        // Every probe costs a full all-pairs pass, cubic on cliques; thin the
        // sample set and cap confirmations to keep the scan tractable.
        local.size.ks = {3, 5, 8};
        local.size.ps = {3, 5, 8};
        local.size.p_confirm_cap = std::min<NodeId>(local.size.p_confirm_cap, 1000);
    }

    std::vector<AxiomCell> cells;
    auto size = check_size_axiom(measure, local.size);
    cells.push_back({measure, "size", to_string(size.verdict), size.witness});
    auto density = check_density_axiom(measure, local.density_k_min, local.density_k_max);
    cells.push_back({measure, "density", density.satisfied ? "yes" : "no", density.witness});
    auto mono = check_score_monotonicity(measure, local.monotonicity_trials, local.seed);
    cells.push_back({measure, "monotonicity", mono.satisfied ? "yes" : "no", mono.witness});
    return cells;
}

std::vector<AxiomCell> axiom_matrix(const AxiomBenchConfig& cfg) {
    std::vector<AxiomCell> cells;
    for (const auto& m : axiom_measures()) {
        auto rows = axiom_matrix_for(m, cfg);
        cells.insert(cells.end(), rows.begin(), rows.end());
    }
    return cells;
}

}  // namespace centrality
