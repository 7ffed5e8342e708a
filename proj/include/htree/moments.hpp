#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "htree/channel_sampler.hpp"
#include "htree/predictive_estimator.hpp"
#include "htree/tree_model.hpp"

namespace htree {

// Pairing of an even vertex subset whose connecting paths are pairwise
// edge-disjoint, together with the union of those paths' edge indices.
// Such a pairing exists and its edge union is unique for any even subset
// of a tree; paths of the returned pairs partition edge_union.
struct PathMatching {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> edge_union;  // indices into topology.edges, ascending
    int64_t edge_visits = 0;      // work counter; at most vertex_count - 1
};

// Leaf-to-root parity sweep. vertices must be distinct, valid, and even
// in number (the empty subset yields an empty matching).
PathMatching matching_pairs(const TreeTopology& topology,
                            const std::vector<int>& vertices);

// E[prod_{v in subset} X_v] under the model: zero for odd subsets, else
// the product of tanh(theta) over the matching's edge union.
double exact_moment(const IsingTreeModel& model, const std::vector<int>& vertices);

// Plug-in estimate: channel-corrected, clamped per-edge correlations from
// the observed table, multiplied over the matching's edge union of the
// learned tree. q in [0, 0.5).
double estimate_moment(const TreeTopology& learned_tree,
                       const CorrelationTable& noisy_correlations, double q,
                       const std::vector<int>& vertices);

} // namespace htree
