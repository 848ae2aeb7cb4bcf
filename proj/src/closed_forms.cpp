#include "centrality/closed_forms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "centrality/errors.hpp"

namespace centrality {

namespace {

double harmonic_number(std::uint64_t m) {
    double h = 0.0;
    for (std::uint64_t i = m; i >= 1; --i) h += 1.0 / static_cast<double>(i);
    return h;
}

// Solves a 3x3 system by Gaussian elimination with partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> m) {
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        std::swap(m[col], m[pivot]);
        if (m[col][col] == 0.0) throw std::runtime_error("singular closed-form system");
        for (int row = col + 1; row < 3; ++row) {
            double f = m[row][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[row][c] -= f * m[col][c];
        }
    }
    std::array<double, 3> x{};
    for (int row = 2; row >= 0; --row) {
        double s = m[row][3];
        for (int c = row + 1; c < 3; ++c) s -= m[row][c] * x[c];
        x[row] = s / m[row][row];
    }
    return x;
}

void require_range(NodeId k, NodeId p) {
    if (k < 3 || p < 3) throw InvalidParameter("closed forms require k, p >= 3");
}

}  // namespace

CliqueCycleForm clique_cycle_form(const std::string& measure, NodeId k, NodeId p,
                                  const FormParams& params) {
    require_range(k, p);
    const double kk = k, pp = p;
    CliqueCycleForm f;
    if (measure == "degree") {
        f = {kk - 1, 1, false};
    } else if (measure == "harmonic") {
        f = {kk - 1, harmonic_number(p - 1), false};
    } else if (measure == "closeness") {
        f = {1 / (kk - 1), 2 / (pp * (pp - 1)), false};
    } else if (measure == "lin") {
        f = {kk * kk / (kk - 1), 2 * pp / (pp - 1), false};
    } else if (measure == "betweenness") {
        f = {0, (pp - 1) * (pp - 2) / 2, false};
    } else if (measure == "dominant" || measure == "hits") {
        f = {1, 0, true};
    } else if (measure == "seeley" || measure == "pagerank" || measure == "salsa") {
        f = {1, 1, true};
    } else if (measure == "katz") {
        double beta = params.beta;
        f = {1 / (1 - (kk - 1) * beta), 1 / (1 - beta), false};
    } else {
        throw InvalidParameter("no tabulated form for measure '" + measure + "'");
    }
    return f;
}

BridgedForm bridged_form(const std::string& measure, NodeId k, NodeId p,
                         const FormParams& params) {
    require_range(k, p);
    const double kk = k, pp = p, nn = kk + pp;
    BridgedForm f;
    f.cycle.resize(p - 1);

    auto fill_cycle = [&](auto&& value_at) {
        for (NodeId d = 1; d < p; ++d) f.cycle[d - 1] = value_at(d);
    };

    if (measure == "degree") {
        f.clique = kk - 1;
        f.clique_bridge = kk;
        f.cycle_bridge = 2;
        fill_cycle([](NodeId) { return 1.0; });
    } else if (measure == "harmonic") {
        f.clique = kk - 2 + harmonic_number(p + 1);
        f.clique_bridge = kk - 1 + harmonic_number(p);
        f.cycle_bridge = 1 + (kk - 1) / 2 + harmonic_number(p - 1);
        fill_cycle([&](NodeId d) {
            return 1.0 / (d + 1) + (kk - 1) / (d + 2) + harmonic_number(p - 1);
        });
    } else if (measure == "closeness" || measure == "lin") {
        // The graph is strongly connected, so lin is n^2 times closeness.
        double scale = measure == "lin" ? nn * nn : 1.0;
        double rot = pp * (pp - 1) / 2;
        f.clique = scale / (kk - 1 + 2 * pp + rot);
        f.clique_bridge = scale / (kk - 1 + pp + rot);
        f.cycle_bridge = scale / (2 * kk - 1 + rot);
        fill_cycle([&](NodeId d) { return scale / (kk * (d + 2) - 1 + rot); });
    } else if (measure == "betweenness") {
        double in_cycle = (pp - 1) * (pp - 2) / 2;
        f.clique = 0;
        f.clique_bridge = 2 * pp * (kk - 1);
        f.cycle_bridge = 2 * kk * (pp - 1) + in_cycle;
        fill_cycle([&](NodeId) { return kk * (pp - 2) + in_cycle; });
    } else if (measure == "dominant") {
        double lambda = params.lambda;
        f.proportional = true;
        f.clique = 1 / (lambda - kk + 1);
        f.clique_bridge = 1 + f.clique;
        f.cycle_bridge = 1 + lambda;
        fill_cycle([&](NodeId d) { return (1 + lambda) / std::pow(lambda, d); });
    } else if (measure == "seeley") {
        f.proportional = true;
        f.clique = kk - 1;
        f.clique_bridge = kk;
        f.cycle_bridge = 2;
        fill_cycle([](NodeId) { return 1.0; });
    } else if (measure == "katz") {
        double b = params.beta;
        double geo = (1 - std::pow(b, p - 1)) / (1 - b);
        // Unknowns (c, l, r): clique, clique bridge, cycle bridge.
        auto [c, l, r] = solve3({{
            {1 - b * (kk - 2), -b, 0, 1},
            {-b * (kk - 1), 1, -b, 1},
            {0, -b, 1 - b * std::pow(b, p - 1), 1 + b * geo},
        }});
        f.clique = c;
        f.clique_bridge = l;
        f.cycle_bridge = r;
        fill_cycle([&](NodeId d) {
            double bd = std::pow(b, d);
            return (1 - bd) / (1 - b) + bd * r;
        });
    } else if (measure == "pagerank") {
        double a = params.alpha;
        double ap = std::pow(a, p - 1);
        // Same three unknowns with the all-ones preference vector; the actual
        // uniform-preference scores are these divided by n.
        auto [c, l, r] = solve3({{
            {1 - a * (kk - 2) / (kk - 1), -a / kk, 0, 1 - a},
            {-a, 1, -a / 2, 1 - a},
            {0, -a / kk, 1 - a * ap / 2, 1 - a + a * (1 - ap)},
        }});
        f.clique = c / nn;
        f.clique_bridge = l / nn;
        f.cycle_bridge = r / nn;
        fill_cycle([&](NodeId d) {
            double ad = std::pow(a, d);
            return (1 - ad + ad * r / 2) / nn;
        });
    } else if (measure == "hits") {
        double mu = params.mu;
        f.proportional = true;
        f.clique = mu * mu - mu * (kk + 1) + kk - 1;
        f.clique_bridge = (kk - 1) * (kk - 2) * (mu - 1);
        f.cycle_bridge = mu * mu * mu - (kk * kk - 2 * kk + 4) * mu * mu +
                         (3 * kk * kk - 7 * kk + 6) * mu - (kk - 1) * (kk - 1);
        fill_cycle([&](NodeId d) { return d == 1 ? (kk - 1) * (kk - 2) : 0.0; });
    } else if (measure == "salsa") {
        f.proportional = true;
        f.clique = (kk - 1) * (kk + 2);
        f.clique_bridge = kk * (kk + 2);
        f.cycle_bridge = 2 * (kk + 2);
        fill_cycle([&](NodeId d) { return d == 1 ? kk + 2 : kk * kk - kk + 4; });
    } else {
        throw InvalidParameter("no tabulated form for measure '" + measure + "'");
    }
    return f;
}

double hits_characteristic(double mu, NodeId k) {
    const double kk = k;
    return ((mu - (kk * kk - 2 * kk + 6)) * mu + (5 * kk * kk - 12 * kk + 15)) * mu * mu -
           (6 * kk * kk - 16 * kk + 14) * mu + kk * kk - 2 * kk + 1;
}

std::vector<double> expand_clique_cycle(const CliqueCycleForm& f, NodeId k, NodeId p) {
    std::vector<double> v(static_cast<std::size_t>(k) + p);
    for (NodeId i = 0; i < k; ++i) v[i] = f.clique;
    for (NodeId i = 0; i < p; ++i) v[k + i] = f.cycle;
    return v;
}

std::vector<double> expand_bridged(const BridgedForm& f, NodeId k, NodeId p) {
    std::vector<double> v(static_cast<std::size_t>(k) + p);
    v[0] = f.clique_bridge;
    for (NodeId i = 1; i < k; ++i) v[i] = f.clique;
    v[k] = f.cycle_bridge;
    for (NodeId d = 1; d < p; ++d) v[k + d] = f.cycle[d - 1];
    return v;
}

}  // namespace centrality
