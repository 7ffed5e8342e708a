#pragma once

#include <cstdint>
#include <vector>

#include "htree/tree_model.hpp"

namespace htree {

// Full probability table over {-1,+1}^p. State index encoding: bit v of
// the index is vertex v's spin, bit value 0 meaning +1 and 1 meaning -1.
struct PmfTable {
    int vertex_count = 0;
    std::vector<double> prob; // size 1 << vertex_count
};

// Brute-force table of the model. vertex_count <= 20.
PmfTable enumerate_hidden(const IsingTreeModel& model);

// Brute-force table of a correlation-parameterized tree distribution.
// vertex_count <= 20.
PmfTable enumerate_tree(const TreeTopology& topology,
                        const std::vector<double>& edge_mu);

// Pushes a table through the symmetric flip channel by convolving each
// coordinate. vertex_count <= 14.
PmfTable enumerate_noisy(const IsingTreeModel& model, double q);

// E[prod_{v in subset} X_v] under the table.
double oracle_moment(const PmfTable& table, const std::vector<int>& vertices);

// Total variation distance (1/2 L1) between two tables on the same space.
double oracle_tv(const PmfTable& a, const PmfTable& b);

// sup over vertex pairs of the TV between induced two-vertex marginals.
double oracle_pairwise_tv_sup(const PmfTable& a, const PmfTable& b);

} // namespace htree
