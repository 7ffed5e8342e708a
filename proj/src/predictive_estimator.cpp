#include "htree/predictive_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "htree/exact_oracle.hpp"

namespace htree {

namespace {

constexpr int kCrossTopologyLimit = 20;

std::vector<double> model_mu(const IsingTreeModel& m) {
    std::vector<double> mu(m.theta.size());
    for (size_t e = 0; e < mu.size(); ++e) mu[e] = std::tanh(m.theta[e]);
    return mu;
}

double sstv2_core(const TreeTopology& ta, const std::vector<double>& mua,
                  const TreeTopology& tb, const std::vector<double>& mub) {
    if (ta.vertex_count != tb.vertex_count)
        throw std::invalid_argument("distributions must share a vertex count");
    const int p = ta.vertex_count;
    double best = 0.0;
    for (int s = 0; s < p; ++s) {
        auto pa = path_products_from(ta, mua, s);
        auto pb = path_products_from(tb, mub, s);
        for (int t = s + 1; t < p; ++t)
            best = std::max(best, 0.5 * std::fabs(pa[t] - pb[t]));
    }
    return best;
}

// Couplings for a correlation-parameterized tree; boundary values have none.
std::vector<double> fitted_theta(const FittedTreeDistribution& d) {
    std::vector<double> theta(d.edge_mu.size());
    for (size_t e = 0; e < theta.size(); ++e) {
        if (!(std::fabs(d.edge_mu[e]) < 1.0))
            throw std::domain_error("edge correlation at magnitude 1 has no finite coupling");
        theta[e] = std::atanh(d.edge_mu[e]);
    }
    return theta;
}

double symmetric_kl_core(const TreeTopology& ta, const std::vector<double>& mua,
                         const std::vector<double>& thetaa,
                         const TreeTopology& tb, const std::vector<double>& mub,
                         const std::vector<double>& thetab) {
    if (ta.vertex_count != tb.vertex_count)
        throw std::invalid_argument("distributions must share a vertex count");
    if (same_edge_set(ta, tb)) {
        // Shared topology: the log-partition terms cancel and the divergence
        // is an inner product of coupling and moment differences (in nats).
        double acc = 0.0;
        for (size_t e = 0; e < ta.edges.size(); ++e)
            acc += (thetaa[e] - thetab[e]) * (mua[e] - mub[e]);
        return acc;
    }
    if (ta.vertex_count > kCrossTopologyLimit)
        throw std::length_error("cross-topology symmetric KL is limited to 20 vertices");
    PmfTable pa = enumerate_tree(ta, mua);
    PmfTable pb = enumerate_tree(tb, mub);
    double acc = 0.0;
    for (size_t s = 0; s < pa.prob.size(); ++s) {
        // |mu| < 1 on every edge keeps both tables strictly positive.
        acc += (pa.prob[s] - pb.prob[s]) * (std::log(pa.prob[s]) - std::log(pb.prob[s]));
    }
    return acc;
}

} // namespace

FittedTreeDistribution fit_distribution(const TreeTopology& tree,
                                        const CorrelationTable& noisy_correlations,
                                        double q) {
    if (!(q >= 0.0 && q < 0.5))
        throw std::domain_error("channel with q >= 0.5 erases pairwise information");
    if (tree.vertex_count != noisy_correlations.vertex_count)
        throw std::invalid_argument("tree and correlation table must share a vertex count");
    const double scale = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    FittedTreeDistribution d;
    d.topology = tree;
    d.q_used = q;
    d.edge_mu.resize(tree.edges.size());
    for (size_t e = 0; e < tree.edges.size(); ++e) {
        auto [i, j] = tree.edges[e];
        double raw = noisy_correlations.values[i][j] / scale;
        if (!std::isfinite(raw)) throw std::invalid_argument("correlation entries must be finite");
        d.edge_mu[e] = std::clamp(raw, -1.0, 1.0);
    }
    return d;
}

double sstv2(const IsingTreeModel& a, const IsingTreeModel& b) {
    return sstv2_core(a.topology, model_mu(a), b.topology, model_mu(b));
}
double sstv2(const IsingTreeModel& a, const FittedTreeDistribution& b) {
    return sstv2_core(a.topology, model_mu(a), b.topology, b.edge_mu);
}
double sstv2(const FittedTreeDistribution& a, const IsingTreeModel& b) {
    return sstv2_core(a.topology, a.edge_mu, b.topology, model_mu(b));
}
double sstv2(const FittedTreeDistribution& a, const FittedTreeDistribution& b) {
    return sstv2_core(a.topology, a.edge_mu, b.topology, b.edge_mu);
}

double symmetric_kl(const IsingTreeModel& a, const IsingTreeModel& b) {
    return symmetric_kl_core(a.topology, model_mu(a), a.theta,
                             b.topology, model_mu(b), b.theta);
}
double symmetric_kl(const IsingTreeModel& a, const FittedTreeDistribution& b) {
    return symmetric_kl_core(a.topology, model_mu(a), a.theta,
                             b.topology, b.edge_mu, fitted_theta(b));
}
double symmetric_kl(const FittedTreeDistribution& a, const IsingTreeModel& b) {
    return symmetric_kl_core(a.topology, a.edge_mu, fitted_theta(a),
                             b.topology, model_mu(b), b.theta);
}
double symmetric_kl(const FittedTreeDistribution& a, const FittedTreeDistribution& b) {
    return symmetric_kl_core(a.topology, a.edge_mu, fitted_theta(a),
                             b.topology, b.edge_mu, fitted_theta(b));
}

double predict_conditional(const FittedTreeDistribution& dist, int i, int j, int x_j) {
    const auto& t = dist.topology;
    if (i < 0 || i >= t.vertex_count || j < 0 || j >= t.vertex_count)
        throw std::out_of_range("vertex index out of range");
    if (i == j) throw std::invalid_argument("conditioning vertex must differ from the target");
    if (x_j != 1 && x_j != -1) throw std::invalid_argument("spin value must be -1 or +1");
    double prod = 1.0;
    int a = i, b = j;
    while (a != b) {
        if (t.depth[a] < t.depth[b]) std::swap(a, b);
        prod *= dist.edge_mu[t.parent_edge[a]];
        a = t.parent[a];
    }
    return 0.5 * (1.0 + x_j * prod);
}

} // namespace htree
