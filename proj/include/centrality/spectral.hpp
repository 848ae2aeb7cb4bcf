#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "centrality/graph.hpp"
#include "centrality/score.hpp"

namespace centrality {

struct SpectralParams {
    double alpha = 0.5;                  // pagerank damping, 0 <= alpha < 1
    std::optional<double> beta;          // katz attenuation; unset = 1/(2*lambda_hat)
    double tol = 1e-12;                  // relative l-infinity change threshold
    std::uint64_t max_iters = 1000000;
    std::vector<double> preference;      // pagerank teleport weights; empty = uniform
    bool normalize_output = false;       // post-hoc l1 normalization of pagerank
};

struct EigenEstimate {
    double lambda = 0.0;           // dominant eigenvalue of A
    double lambda_residual = 0.0;  // linf(x A - lambda x) at the returned vector
    double mu = 0.0;               // dominant eigenvalue of A^T A
    double mu_residual = 0.0;
    std::uint64_t iterations = 0;
};

// Power iterations from the uniform vector with l1 normalization. A collapse
// to the zero vector means a nilpotent matrix and yields estimate 0.
EigenEstimate estimate_dominant_eigenvalues(const Graph& g, const SpectralParams& params = {});

// Left dominant eigenvector of A, l1-normalized. Period-2 oscillation is
// resolved by averaging two consecutive iterates. Throws
// DegenerateSpectrumError when the iteration collapses to zero.
ScoreVector dominant_eigenvector(const Graph& g, const SpectralParams& params = {});

// Fixed point of x <- x Abar from the uniform vector, l1-normalized when its
// mass is nonzero (mass leaks through outdegree-0 nodes); the all-zero limit
// is reported as a degenerate zero vector.
ScoreVector seeley(const Graph& g, const SpectralParams& params = {});

// Solution of k = 1 + beta k A. Requires beta < (1 - 1e-6)/lambda_hat.
ScoreVector katz(const Graph& g, const SpectralParams& params = {});

// Fixed point of p <- alpha p Abar + (1 - alpha) v. No patching of null rows,
// so with dangling nodes the mass stays below 1 unless normalize_output is set.
ScoreVector pagerank(const Graph& g, const SpectralParams& params = {});

struct HitsScores {
    ScoreVector authority;
    ScoreVector hub;
};

// h <- a A^T, a <- h A from the uniform vector, authority l1-normalized each
// round. A graph with no arcs yields degenerate zero vectors.
HitsScores hits(const Graph& g, const SpectralParams& params = {});

// Closed form: nodes x, y sharing a predecessor are grouped into components;
// within a component C, score(x) = indegree(x)/sum_C(indegree) * |C|/n.
// Zero-indegree nodes score 0.
ScoreVector salsa(const Graph& g);

// The backward/forward random-walk iteration h <- a In, a <- h Abar from the
// uniform vector; agrees with salsa() at the fixed point.
ScoreVector salsa_iterative(const Graph& g, const SpectralParams& params = {});

}  // namespace centrality
