#include "htree/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace htree {

namespace {

void check_subset(const TreeTopology& t, const std::vector<int>& vertices,
                  std::vector<char>& flag) {
    flag.assign(t.vertex_count, 0);
    for (int v : vertices) {
        if (v < 0 || v >= t.vertex_count) throw std::out_of_range("vertex index out of range");
        if (flag[v]) throw std::invalid_argument("subset vertices must be distinct");
        flag[v] = 1;
    }
}

} // namespace

PathMatching matching_pairs(const TreeTopology& topology,
                            const std::vector<int>& vertices) {
    std::vector<char> flag;
    check_subset(topology, vertices, flag);
    if (vertices.size() % 2 != 0)
        throw std::invalid_argument("path matching needs an even subset");

    PathMatching out;
    out.pairs.reserve(vertices.size() / 2);
    if (vertices.empty()) return out;

    const int p = topology.vertex_count;
    // Deepest-first vertex order, ascending index within a depth.
    int max_depth = 0;
    for (int v = 0; v < p; ++v) max_depth = std::max(max_depth, topology.depth[v]);
    std::vector<std::vector<int>> buckets(max_depth + 1);
    for (int v = 0; v < p; ++v) buckets[topology.depth[v]].push_back(v);

    // carry[v]: the subset vertex whose partial path currently ends at v.
    std::vector<int> carry(p, -1);
    for (int v : vertices) carry[v] = v;

    // A flagged vertex passes its pending endpoint across the parent edge;
    // two pending endpoints meeting at a vertex close a pair there (their
    // joined walks form the pair's path, and the meeting point is the
    // deepest common ancestor). Each edge is crossed at most once, so the
    // collected paths are edge-disjoint and their union is exactly the set
    // of edges with an odd number of subset vertices below them.
    for (int d = max_depth; d >= 1; --d) {
        for (int v : buckets[d]) {
            if (!flag[v]) continue;
            int u = topology.parent[v];
            out.edge_union.push_back(topology.parent_edge[v]);
            ++out.edge_visits;
            if (flag[u]) {
                out.pairs.emplace_back(carry[u], carry[v]);
                flag[u] = 0;
                carry[u] = -1;
            } else {
                flag[u] = 1;
                carry[u] = carry[v];
            }
            flag[v] = 0;
            carry[v] = -1;
        }
    }
    if (flag[0]) throw std::logic_error("parity sweep left the root flagged");
    std::sort(out.edge_union.begin(), out.edge_union.end());
    return out;
}

double exact_moment(const IsingTreeModel& model, const std::vector<int>& vertices) {
    std::vector<char> flag;
    check_subset(model.topology, vertices, flag);
    if (vertices.size() % 2 != 0) return 0.0;
    PathMatching m = matching_pairs(model.topology, vertices);
    double prod = 1.0;
    for (int e : m.edge_union) prod *= std::tanh(model.theta[e]);
    return prod;
}

double estimate_moment(const TreeTopology& learned_tree,
                       const CorrelationTable& noisy_correlations, double q,
                       const std::vector<int>& vertices) {
    if (!(q >= 0.0 && q < 0.5))
        throw std::domain_error("channel with q >= 0.5 erases pairwise information");
    if (learned_tree.vertex_count != noisy_correlations.vertex_count)
        throw std::invalid_argument("tree and correlation table must share a vertex count");
    std::vector<char> flag;
    check_subset(learned_tree, vertices, flag);
    if (vertices.size() % 2 != 0) return 0.0;
    PathMatching m = matching_pairs(learned_tree, vertices);
    const double scale = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
    double prod = 1.0;
    for (int e : m.edge_union) {
        auto [i, j] = learned_tree.edges[e];
        double mu = std::clamp(noisy_correlations.values[i][j] / scale, -1.0, 1.0);
        prod *= mu;
    }
    return prod;
}

} // namespace htree
