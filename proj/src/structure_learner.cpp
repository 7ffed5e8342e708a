#include "htree/structure_learner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace htree {

TreeTopology chow_liu(const CorrelationTable& correlations) {
    const int p = correlations.vertex_count;
    if (p < 2) throw std::invalid_argument("structure learning needs at least 2 vertices");
    if (correlations.values.size() != static_cast<size_t>(p))
        throw std::invalid_argument("correlation table shape is inconsistent");
    for (const auto& row : correlations.values)
        if (row.size() != static_cast<size_t>(p))
            throw std::invalid_argument("correlation table shape is inconsistent");

    struct Candidate {
        double weight;
        int i, j;
    };
    std::vector<Candidate> cand;
    cand.reserve(static_cast<size_t>(p) * (p - 1) / 2);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            double w = std::fabs(correlations.values[i][j]);
            if (!std::isfinite(w)) throw std::invalid_argument("correlation entries must be finite");
            cand.push_back({w, i, j});
        }
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<int> dsu(p);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&dsu](int x) {
        while (dsu[x] != x) {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        return x;
    };

    std::vector<std::pair<int, int>> chosen;
    chosen.reserve(p - 1);
    for (const auto& c : cand) {
        int a = find(c.i), b = find(c.j);
        if (a == b) continue;
        dsu[b] = a;
        chosen.emplace_back(c.i, c.j);
        if (static_cast<int>(chosen.size()) == p - 1) break;
    }
    return TreeTopology::from_edges(p, chosen);
}

int structure_error(const TreeTopology& estimate, const TreeTopology& truth) {
    if (estimate.vertex_count != truth.vertex_count)
        throw std::invalid_argument("trees must share a vertex count");
    return same_edge_set(estimate, truth) ? 0 : 1;
}

} // namespace htree
