#include "centrality/naive.hpp"

#include "centrality/graph_algorithms.hpp"

namespace centrality {

namespace {

std::string product_name(DensityTerm density, SizeTerm size) {
    std::string name = density == DensityTerm::Indegree ? "indegree" : "beta";
    name += size == SizeTerm::Coreachable ? "-co" : "-weak";
    return name;
}

}  // namespace

ScoreVector beta_measure(const Graph& g) {
    ScoreVector sv;
    sv.measure = "beta";
    sv.scores.assign(g.node_count(), 0.0);
    for (NodeId x = 0; x < g.node_count(); ++x)
        for (NodeId y : g.predecessors(x)) sv.scores[x] += 1.0 / g.out_degree(y);
    return sv;
}

double beta_measure_of(const Graph& g, NodeId x) {
    double sum = 0.0;
    for (NodeId y : g.predecessors(x)) sum += 1.0 / g.out_degree(y);
    return sum;
}

ScoreVector product_measure(const Graph& g, DensityTerm density, SizeTerm size) {
    ScoreVector sv;
    sv.measure = product_name(density, size);
    sv.scores.resize(g.node_count());

    std::vector<double> dens;
    if (density == DensityTerm::Indegree) {
        dens.resize(g.node_count());
        for (NodeId x = 0; x < g.node_count(); ++x) dens[x] = g.in_degree(x);
    } else {
        dens = beta_measure(g).scores;
    }

    if (size == SizeTerm::WeaklyReachable) {
        auto wcc = weakly_connected_components(g);
        for (NodeId x = 0; x < g.node_count(); ++x)
            sv.scores[x] = dens[x] * static_cast<double>(wcc.members[wcc.component_of[x]].size());
    } else {
        for (NodeId x = 0; x < g.node_count(); ++x)
            sv.scores[x] = dens[x] * static_cast<double>(coreachable_count(g, x));
    }
    return sv;
}

double product_measure_of(const Graph& g, NodeId x, DensityTerm density, SizeTerm size) {
    double dens = density == DensityTerm::Indegree ? static_cast<double>(g.in_degree(x))
                                                   : beta_measure_of(g, x);
    double reach = size == SizeTerm::Coreachable
                       ? static_cast<double>(coreachable_count(g, x))
                       : static_cast<double>(weakly_reachable_count(g, x));
    return dens * reach;
}

}  // namespace centrality
