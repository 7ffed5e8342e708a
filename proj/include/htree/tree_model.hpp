#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace htree {

using SpinVector = std::vector<int8_t>; // entries are -1 or +1

// Undirected labeled tree on vertices 0..vertex_count-1, rooted at 0.
// Invariants after from_edges():
//   - edges.size() == vertex_count - 1, each stored with first < second,
//     sorted lexicographically
//   - parent[0] == -1, parent[v] is v's neighbor on the path to the root
//   - depth[0] == 0, depth[v] == depth[parent[v]] + 1
//   - parent_edge[v] is the index into edges of (v, parent[v]) for v != 0
struct TreeTopology {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> parent_edge;
    std::vector<std::vector<std::pair<int, int>>> adjacency; // (neighbor, edge index)

    static TreeTopology from_edges(int vertex_count,
                                   const std::vector<std::pair<int, int>>& edges);

    // Index into edges for the pair {a,b}, or -1 if not an edge.
    int edge_between(int a, int b) const;
};

bool same_edge_set(const TreeTopology& a, const TreeTopology& b);

// Zero-field Ising model on a tree. theta[e] is the coupling on edges[e];
// all couplings are finite and nonzero. alpha/beta are the realized
// min/max of |theta| (0 for a single-vertex model).
struct IsingTreeModel {
    TreeTopology topology;
    std::vector<double> theta;
    double alpha = 0.0;
    double beta = 0.0;

    static IsingTreeModel create(TreeTopology topology, std::vector<double> theta);
};

// tanh(theta) on edge index e.
double edge_correlation(const IsingTreeModel& model, int edge_index);

// E[X_i X_j]: product of tanh(theta) along the unique i-j path. i != j.
double pair_correlation(const IsingTreeModel& model, int i, int j);

// log of the probability of one configuration (natural log).
double log_pmf(const IsingTreeModel& model, const SpinVector& spins);

// Mutual information, in bits, between the endpoints of an edge with
// correlation mu. Defined for |mu| < 1; even and increasing in |mu|.
double mutual_information(double mu);

// Products of edge weights along the paths source -> v, for all v.
// weights are per-edge values aligned with topology.edges.
std::vector<double> path_products_from(const TreeTopology& topology,
                                       const std::vector<double>& weights,
                                       int source);

} // namespace htree
