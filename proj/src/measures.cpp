#include "centrality/measures.hpp"

#include <algorithm>

#include "centrality/betweenness.hpp"
#include "centrality/errors.hpp"
#include "centrality/geometric.hpp"
#include "centrality/naive.hpp"

namespace centrality {

const std::vector<std::string>& measure_ids() {
    static const std::vector<std::string> ids = {
        "degree", "harmonic", "closeness",   "lin",           "betweenness", "dominant",
        "seeley", "katz",     "pagerank",    "hits",          "salsa",       "beta",
        "indegree-co",        "indegree-weak", "beta-co",     "beta-weak",
    };
    return ids;
}

bool is_measure_id(const std::string& id) {
    const auto& ids = measure_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ScoreVector compute_measure(const Graph& g, const std::string& id, const SpectralParams& params,
                            int threads) {
    if (id == "degree") return indegree_centrality(g);
    if (id == "harmonic") return harmonic(g, threads);
    if (id == "closeness") return closeness(g, threads);
    if (id == "lin") return lin(g, threads);
    if (id == "betweenness") return betweenness(g, threads);
    if (id == "dominant") return dominant_eigenvector(g, params);
    if (id == "seeley") return seeley(g, params);
    if (id == "katz") return katz(g, params);
    if (id == "pagerank") return pagerank(g, params);
    if (id == "hits") return hits(g, params).authority;
    if (id == "salsa") return salsa(g);
    if (id == "beta") return beta_measure(g);
    if (id == "indegree-co") return product_measure(g, DensityTerm::Indegree, SizeTerm::Coreachable);
    if (id == "indegree-weak")
        return product_measure(g, DensityTerm::Indegree, SizeTerm::WeaklyReachable);
    if (id == "beta-co") return product_measure(g, DensityTerm::Beta, SizeTerm::Coreachable);
    if (id == "beta-weak") return product_measure(g, DensityTerm::Beta, SizeTerm::WeaklyReachable);
    throw InvalidParameter("unknown measure id '" + id + "'");
}

}  // namespace centrality
