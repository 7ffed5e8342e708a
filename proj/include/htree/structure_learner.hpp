#pragma once

#include "htree/channel_sampler.hpp"
#include "htree/tree_model.hpp"

namespace htree {

// Maximum spanning tree over edge weights |values[i][j]|, built with
// Kruskal + union-find. Ties break toward the lexicographically smallest
// (i,j), so the result is deterministic. Requires vertex_count >= 2.
//
// Because the per-pair mutual information is increasing in |correlation|,
// maximizing summed |correlation| and maximizing summed mutual information
// select the same tree.
TreeTopology chow_liu(const CorrelationTable& correlations);

// 1 if the two trees differ as undirected edge sets, else 0.
// Mismatched vertex counts are a caller error.
int structure_error(const TreeTopology& estimate, const TreeTopology& truth);

} // namespace htree
