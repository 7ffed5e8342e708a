#pragma once

#include <vector>

#include "htree/channel_sampler.hpp"
#include "htree/tree_model.hpp"

namespace htree {

// Tree distribution parameterized directly by per-edge correlations
// (edge_mu[e] aligned with topology.edges, each in [-1, 1]).
struct FittedTreeDistribution {
    TreeTopology topology;
    std::vector<double> edge_mu;
    double q_used = 0.0;
};

// Per-edge moment matching with channel correction: each edge correlation
// is the observed value divided by (1-2q)^2, clamped to [-1, 1].
// q must be in [0, 0.5).
FittedTreeDistribution fit_distribution(const TreeTopology& tree,
                                        const CorrelationTable& noisy_correlations,
                                        double q);

// Worst pairwise total variation between induced two-vertex marginals:
//   sup_{i<j} (1/2) |mu_a(i,j) - mu_b(i,j)|
// where mu(i,j) is the path product of edge correlations. Symmetric, in
// [0,1], and a pseudo-metric over distributions on the same vertex set.
double sstv2(const IsingTreeModel& a, const IsingTreeModel& b);
double sstv2(const IsingTreeModel& a, const FittedTreeDistribution& b);
double sstv2(const FittedTreeDistribution& a, const IsingTreeModel& b);
double sstv2(const FittedTreeDistribution& a, const FittedTreeDistribution& b);

// Symmetric KL divergence D(P||Q) + D(Q||P), in nats.
// Same topology: the closed form sum_e (theta_e - theta'_e)(mu_e - mu'_e)
// (the log-partition terms cancel). Different topologies: exact
// enumeration, supported for vertex_count <= 20 only.
// Fitted inputs with |edge_mu| == 1 have no finite coupling.
double symmetric_kl(const IsingTreeModel& a, const IsingTreeModel& b);
double symmetric_kl(const IsingTreeModel& a, const FittedTreeDistribution& b);
double symmetric_kl(const FittedTreeDistribution& a, const IsingTreeModel& b);
double symmetric_kl(const FittedTreeDistribution& a, const FittedTreeDistribution& b);

// P(X_i = +1 | X_j = x_j) = (1 + x_j * pathprod(i,j)) / 2. i != j,
// x_j in {-1,+1}.
double predict_conditional(const FittedTreeDistribution& dist, int i, int j,
                           int x_j);

} // namespace htree
