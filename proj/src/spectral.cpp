#include "centrality/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "centrality/errors.hpp"
#include "centrality/graph_algorithms.hpp"

namespace centrality {

namespace {

double l1_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

double linf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Change of `a` against `b`, relative to the scale of `a`. The floor keeps the
// ratio finite while a mass-leaking iteration decays toward the zero vector;
// such runs only converge once the values underflow to an exact fixed point.
double rel_change(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    return diff / std::max(linf_norm(a), 1e-300);
}

void scale_to_l1(std::vector<double>& v) {
    double mass = l1_norm(v);
    if (mass > 0.0)
        for (double& x : v) x /= mass;
}

std::vector<double> uniform_vector(NodeId n) {
    return std::vector<double>(n, n ? 1.0 / n : 0.0);
}

struct FixedPoint {
    std::vector<double> x;
    std::uint64_t iterations = 0;
};

// Runs x <- step(x) until the relative l-infinity change drops below tol.
// A period-2 oscillation (the iterate agrees with the one two steps back but
// not with its direct predecessor) settles on the average of the last two
// iterates, which projects out the oscillating component.
template <typename Step>
FixedPoint iterate_to_fixed_point(std::vector<double> x, const SpectralParams& params,
                                  bool normalize_each_round, const char* what, Step&& step) {
    std::vector<double> prev;
    double change = 0.0;
    for (std::uint64_t it = 1; it <= params.max_iters; ++it) {
        std::vector<double> next = step(x);
        if (normalize_each_round) scale_to_l1(next);
        change = rel_change(next, x);
        if (change < params.tol) return {std::move(next), it};
        if (!prev.empty() && rel_change(next, prev) < params.tol) {
            for (std::size_t i = 0; i < next.size(); ++i) next[i] = 0.5 * (next[i] + x[i]);
            if (normalize_each_round) scale_to_l1(next);
            return {std::move(next), it};
        }
        prev = std::move(x);
        x = std::move(next);
    }
    throw ConvergenceError(what, params.max_iters, change);
}

ScoreVector make_score(std::string measure, std::vector<double> scores) {
    ScoreVector sv;
    sv.measure = std::move(measure);
    sv.scores = std::move(scores);
    return sv;
}

bool all_zero(const std::vector<double>& v) { return l1_norm(v) == 0.0; }

void validate_common(const SpectralParams& params) {
    if (!(params.tol > 0.0)) throw InvalidParameter("tol must be positive");
    if (params.max_iters == 0) throw InvalidParameter("max_iters must be positive");
}

}  // namespace

EigenEstimate estimate_dominant_eigenvalues(const Graph& g, const SpectralParams& params) {
    validate_common(params);
    EigenEstimate est;
    if (g.node_count() == 0) return est;

    // lambda: power method on x <- x A, l1-normalized. A collapse to zero
    // means every long walk dies out, so the estimate stays 0.
    {
        bool collapsed = false;
        auto fp = iterate_to_fixed_point(
            uniform_vector(g.node_count()), params, true, "eigenvalue estimation",
            [&](const std::vector<double>& x) {
                auto y = apply_adjacency(g, x);
                if (all_zero(y)) collapsed = true;
                return y;
            });
        est.iterations = fp.iterations;
        if (!collapsed) {
            auto image = apply_adjacency(g, fp.x);
            est.lambda = l1_norm(image) / l1_norm(fp.x);
            for (std::size_t i = 0; i < image.size(); ++i)
                est.lambda_residual =
                    std::max(est.lambda_residual, std::abs(image[i] - est.lambda * fp.x[i]));
        }
    }

    // mu: power method on a <- a A^T A (two half-steps), l1-normalized.
    {
        bool collapsed = false;
        auto fp = iterate_to_fixed_point(
            uniform_vector(g.node_count()), params, true, "eigenvalue estimation",
            [&](const std::vector<double>& a) {
                auto y = apply_adjacency(g, apply_adjacency_transpose(g, a));
                if (all_zero(y)) collapsed = true;
                return y;
            });
        est.iterations += fp.iterations;
        if (!collapsed) {
            auto image = apply_adjacency(g, apply_adjacency_transpose(g, fp.x));
            est.mu = l1_norm(image) / l1_norm(fp.x);
            for (std::size_t i = 0; i < image.size(); ++i)
                est.mu_residual =
                    std::max(est.mu_residual, std::abs(image[i] - est.mu * fp.x[i]));
        }
    }
    return est;
}

ScoreVector dominant_eigenvector(const Graph& g, const SpectralParams& params) {
    validate_common(params);
    if (g.node_count() == 0) throw DegenerateSpectrumError("empty graph has no spectrum");
    auto fp = iterate_to_fixed_point(uniform_vector(g.node_count()), params, true,
                                     "dominant eigenvector", [&](const std::vector<double>& x) {
                                         auto y = apply_adjacency(g, x);
                                         if (all_zero(y))
                                             throw DegenerateSpectrumError(
                                                 "power iteration collapsed to the zero vector");
                                         return y;
                                     });
    auto sv = make_score("dominant", std::move(fp.x));
    sv.normalized = true;
    sv.iterations = fp.iterations;
    auto image = apply_adjacency(g, sv.scores);
    double lambda = l1_norm(image);
    for (std::size_t i = 0; i < image.size(); ++i)
        sv.residual = std::max(sv.residual, std::abs(image[i] - lambda * sv.scores[i]));
    return sv;
}

ScoreVector seeley(const Graph& g, const SpectralParams& params) {
    validate_common(params);
    auto fp = iterate_to_fixed_point(
        uniform_vector(g.node_count()), params, false, "seeley",
        [&](const std::vector<double>& x) { return apply_out_normalized(g, x); });
    auto sv = make_score("seeley", std::move(fp.x));
    sv.iterations = fp.iterations;
    if (all_zero(sv.scores)) {
        sv.degenerate = true;
    } else {
        scale_to_l1(sv.scores);
        sv.normalized = true;
    }
    return sv;
}

// min(max out-degree, max in-degree) bounds the dominant eigenvalue from
// above; a beta safely below 1/bound needs no power iteration to validate.
static double spectral_degree_bound(const Graph& g) {
    std::size_t out = 0, in = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out = std::max(out, g.successors(v).size());
        in = std::max(in, g.predecessors(v).size());
    }
    return static_cast<double>(std::min(out, in));
}

ScoreVector katz(const Graph& g, const SpectralParams& params) {
    validate_common(params);
    double beta;
    if (params.beta) {
        beta = *params.beta;
        if (!(beta > 0.0)) throw InvalidParameter("beta must be positive");
        if (beta * spectral_degree_bound(g) >= 1.0 - 1e-6) {
            double lambda = estimate_dominant_eigenvalues(g, params).lambda;
            if (lambda > 0.0 && beta >= (1.0 - 1e-6) / lambda)
                throw InvalidParameter("beta too large: the path summation diverges");
        }
    } else {
        double lambda = estimate_dominant_eigenvalues(g, params).lambda;
        beta = lambda > 0.0 ? 1.0 / (2.0 * lambda) : 0.5;
    }
    auto fp = iterate_to_fixed_point(std::vector<double>(g.node_count(), 1.0), params, false,
                                     "katz", [&](const std::vector<double>& x) {
                                         auto y = apply_adjacency(g, x);
                                         for (double& v : y) v = 1.0 + beta * v;
                                         return y;
                                     });
    auto sv = make_score("katz", std::move(fp.x));
    sv.params = {{"beta", beta}};
    sv.iterations = fp.iterations;
    return sv;
}

ScoreVector pagerank(const Graph& g, const SpectralParams& params) {
    validate_common(params);
    if (!(params.alpha >= 0.0) || !(params.alpha < 1.0))
        throw InvalidParameter("alpha must lie in [0, 1)");
    std::vector<double> v;
    if (params.preference.empty()) {
        v = uniform_vector(g.node_count());
    } else {
        if (params.preference.size() != g.node_count())
            throw InvalidParameter("preference vector size differs from node count");
        for (double w : params.preference)
            if (!(w >= 0.0) || !std::isfinite(w))
                throw InvalidParameter("preference weights must be finite and nonnegative");
        if (l1_norm(params.preference) == 0.0)
            throw InvalidParameter("preference vector must have positive mass");
        v = params.preference;
    }
    const double alpha = params.alpha;
    std::vector<double> start(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) start[i] = (1.0 - alpha) * v[i];
    auto fp = iterate_to_fixed_point(std::move(start), params, false, "pagerank",
                                     [&](const std::vector<double>& p) {
                                         auto y = apply_out_normalized(g, p);
                                         for (NodeId i = 0; i < g.node_count(); ++i)
                                             y[i] = alpha * y[i] + (1.0 - alpha) * v[i];
                                         return y;
                                     });
    auto sv = make_score("pagerank", std::move(fp.x));
    sv.params = {{"alpha", alpha}};
    sv.iterations = fp.iterations;
    if (params.normalize_output && !all_zero(sv.scores)) {
        scale_to_l1(sv.scores);
        sv.normalized = true;
    }
    return sv;
}

HitsScores hits(const Graph& g, const SpectralParams& params) {
    validate_common(params);
    std::vector<double> hub(g.node_count(), 0.0);
    bool collapsed = false;
    auto fp = iterate_to_fixed_point(uniform_vector(g.node_count()), params, true, "hits",
                                     [&](const std::vector<double>& a) {
                                         hub = apply_adjacency_transpose(g, a);
                                         auto next = apply_adjacency(g, hub);
                                         if (all_zero(next)) collapsed = true;
                                         return next;
                                     });
    HitsScores out;
    out.authority = make_score("hits", std::move(fp.x));
    out.authority.iterations = fp.iterations;
    out.hub = make_score("hits-hub", std::move(hub));
    if (collapsed) {
        std::fill(out.authority.scores.begin(), out.authority.scores.end(), 0.0);
        std::fill(out.hub.scores.begin(), out.hub.scores.end(), 0.0);
        out.authority.degenerate = out.hub.degenerate = true;
        return out;
    }
    out.authority.normalized = true;
    auto image = apply_adjacency(g, apply_adjacency_transpose(g, out.authority.scores));
    double mu = l1_norm(image);
    for (std::size_t i = 0; i < image.size(); ++i)
        out.authority.residual =
            std::max(out.authority.residual, std::abs(image[i] - mu * out.authority.scores[i]));
    if (!all_zero(out.hub.scores)) {
        scale_to_l1(out.hub.scores);
        out.hub.normalized = true;
    } else {
        out.hub.degenerate = true;
    }
    return out;
}

ScoreVector salsa(const Graph& g) {
    const NodeId n = g.node_count();
    // Union-find over "shares a predecessor": each successor list is one group.
    std::vector<NodeId> parent(n);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    auto find = [&](NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (NodeId u = 0; u < n; ++u) {
        auto succ = g.successors(u);
        for (std::size_t i = 1; i < succ.size(); ++i) {
            NodeId a = find(succ[0]), b = find(succ[i]);
            if (a != b) parent[b] = a;
        }
    }
    std::vector<std::uint64_t> comp_size(n, 0), comp_indegree(n, 0);
    for (NodeId x = 0; x < n; ++x) {
        NodeId r = find(x);
        ++comp_size[r];
        comp_indegree[r] += g.in_degree(x);
    }
    auto sv = make_score("salsa", std::vector<double>(n, 0.0));
    for (NodeId x = 0; x < n; ++x) {
        if (g.in_degree(x) == 0) continue;
        NodeId r = find(x);
        sv.scores[x] = static_cast<double>(g.in_degree(x)) / static_cast<double>(comp_indegree[r]) *
                       (static_cast<double>(comp_size[r]) / static_cast<double>(n));
    }
    return sv;
}

ScoreVector salsa_iterative(const Graph& g, const SpectralParams& params) {
    validate_common(params);
    auto fp = iterate_to_fixed_point(uniform_vector(g.node_count()), params, false,
                                     "salsa", [&](const std::vector<double>& a) {
                                         return apply_out_normalized(
                                             g, apply_in_normalized_transpose(g, a));
                                     });
    auto sv = make_score("salsa", std::move(fp.x));
    sv.iterations = fp.iterations;
    sv.degenerate = all_zero(sv.scores) && g.node_count() > 0;
    return sv;
}

}  // namespace centrality
