#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "centrality/graph.hpp"

namespace centrality {

// The eleven measures benched here, in report order.
const std::vector<std::string>& axiom_measures();

// a > b up to a relative tie tolerance: near-equal scores never count as a
// strict win.
bool strictly_greater(double a, double b, double rel_tol = 1e-9);

enum class SizeVerdict { Yes, OnlyK, OnlyP, No };
std::string to_string(SizeVerdict v);

struct SizeSearchConfig {
    std::vector<NodeId> ks = {3, 4, 5, 6, 7, 8};  // sampled clique sizes
    std::vector<NodeId> ps = {3, 4, 5, 6, 7, 8};  // sampled cycle sizes
    NodeId p_bound = 10000;
    NodeId k_bound = 1000;
    // Spot-check cap for expensive measures; larger thresholds are still
    // found, only the trailing confirmations are capped here.
    NodeId p_confirm_cap = 10000;
};

struct SizeAxiomResult {
    SizeVerdict verdict = SizeVerdict::No;
    // k -> least p with cycle score > clique score, for each sampled k found.
    std::map<NodeId, NodeId> p_threshold;
    // p -> least k with clique score > cycle score.
    std::map<NodeId, NodeId> k_threshold;
    std::string witness;
};

// Growing-cycle branch: for every sampled k there is a least p past which a
// cycle node beats a clique node; growing-clique branch symmetrically. Found
// thresholds are re-confirmed at trailing sample points up to the bound, so a
// branch that holds only on an initial segment (closeness) is rejected.
SizeAxiomResult check_size_axiom(const std::string& measure, const SizeSearchConfig& cfg = {});

struct DensityAxiomResult {
    bool satisfied = false;
    std::string witness;
};

// On the bridged graph with k = p, the clique bridge must strictly beat the
// cycle bridge for every sampled k.
DensityAxiomResult check_density_axiom(const std::string& measure, NodeId k_min = 3,
                                       NodeId k_max = 12);

// Least k in [3, k_max] where the clique bridge beats the cycle bridge on the
// bridged graph at this p; nullopt when no sampled k works.
std::optional<NodeId> watershed(const std::string& measure, NodeId p, NodeId k_max = 1000);

// Fixed graph whose added arc provably fails to raise the watched node's
// score; expected values are exact.
struct MonotonicityFixture {
    std::string measure;
    std::string label;
    Graph before;
    Arc added;
    NodeId node;
    double expected_before = 0.0;
    double expected_after = 0.0;
};
const std::vector<MonotonicityFixture>& monotonicity_fixtures();

struct MonotonicityResult {
    bool satisfied = false;
    std::uint64_t trials = 0;
    std::string witness;
};

// Measures with a fixture replay it (a decrease or an unchanged score refutes
// the axiom); the others run seeded random trials on graphs of at most 40
// nodes, adding one absent non-loop arc and requiring a strict increase.
MonotonicityResult check_score_monotonicity(const std::string& measure,
                                            std::uint64_t trials = 1000,
                                            std::uint64_t seed = 1);

struct AxiomCell {
    std::string measure;
    std::string axiom;    // "size", "density", "monotonicity"
    std::string verdict;  // "yes", "no", "only k", "only p"
    std::string witness;
};

struct AxiomBenchConfig {
    SizeSearchConfig size;
    NodeId density_k_min = 3;
    NodeId density_k_max = 12;
    std::uint64_t monotonicity_trials = 1000;
    std::uint64_t seed = 1;
};

// Full 11 x 3 verdict matrix.
std::vector<AxiomCell> axiom_matrix(const AxiomBenchConfig& cfg = {});
std::vector<AxiomCell> axiom_matrix_for(const std::string& measure,
                                        const AxiomBenchConfig& cfg = {});

// Per-measure scores used by the searches: one representative clique node and
// one representative cycle node on the disjoint generator.
struct PairScores {
    double clique = 0.0;
    double cycle = 0.0;
};
PairScores scores_on_clique_cycle(const std::string& measure, NodeId k, NodeId p);

// Scores of the two bridge nodes on the bridged generator.
PairScores scores_on_bridges(const std::string& measure, NodeId k, NodeId p);

}  // namespace centrality
