#pragma once

#include <string>
#include <vector>

#include "centrality/graph.hpp"

namespace centrality {

struct FormParams {
    double alpha = 0.5;   // pagerank
    double beta = 0.0;    // katz; must be set explicitly for katz rows
    double lambda = 0.0;  // dominant eigenvalue of A (dominant row)
    double mu = 0.0;      // dominant eigenvalue of A^T A (hits row)
};

// Predicted scores on make_clique_cycle(k, p), one value per role.
// `proportional` marks rows defined only up to a positive factor.
struct CliqueCycleForm {
    double clique = 0.0;
    double cycle = 0.0;
    bool proportional = false;
};

// Predicted scores on make_bridged_clique_cycle(k, p). cycle[d-1] holds the
// node d arcs past the bridge along the cycle, d = 1..p-1.
struct BridgedForm {
    double clique = 0.0;
    double clique_bridge = 0.0;  // node 0
    double cycle_bridge = 0.0;   // node k
    std::vector<double> cycle;
    bool proportional = false;
};

// Both require k, p >= 3 and one of the eleven measure ids: degree, harmonic,
// closeness, lin, betweenness, dominant, seeley, katz, pagerank, hits, salsa.
// The katz and pagerank bridged rows are produced by solving the three-unknown
// linear systems in (clique, clique_bridge, cycle_bridge) and extending along
// the cycle; dominant and hits rows substitute the supplied lambda / mu.
CliqueCycleForm clique_cycle_form(const std::string& measure, NodeId k, NodeId p,
                                  const FormParams& params = {});
BridgedForm bridged_form(const std::string& measure, NodeId k, NodeId p,
                         const FormParams& params = {});

// Characteristic polynomial whose largest root is the dominant eigenvalue of
// A^T A on the bridged graph; independent of p.
double hits_characteristic(double mu, NodeId k);

// Expands a form into one value per node of the corresponding generator graph.
std::vector<double> expand_clique_cycle(const CliqueCycleForm& f, NodeId k, NodeId p);
std::vector<double> expand_bridged(const BridgedForm& f, NodeId k, NodeId p);

}  // namespace centrality
