#include "htree/tree_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace htree {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

TreeTopology TreeTopology::from_edges(int vertex_count,
                                      const std::vector<std::pair<int, int>>& raw_edges) {
    if (vertex_count < 1) throw std::invalid_argument("vertex_count must be >= 1");
    if (static_cast<int>(raw_edges.size()) != vertex_count - 1)
        throw std::invalid_argument("a tree on p vertices has exactly p-1 edges");

    TreeTopology t;
    t.vertex_count = vertex_count;
    t.edges.reserve(raw_edges.size());
    DisjointSet dsu(vertex_count);
    for (auto [a, b] : raw_edges) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop is not a tree edge");
        if (!dsu.unite(a, b)) throw std::invalid_argument("edges contain a cycle or duplicate");
        t.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    // p-1 successful unions on p vertices force connectivity.
    std::sort(t.edges.begin(), t.edges.end());

    t.adjacency.assign(vertex_count, {});
    for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
        auto [a, b] = t.edges[e];
        t.adjacency[a].emplace_back(b, e);
        t.adjacency[b].emplace_back(a, e);
    }
    for (auto& nbrs : t.adjacency) std::sort(nbrs.begin(), nbrs.end());

    t.parent.assign(vertex_count, -1);
    t.depth.assign(vertex_count, 0);
    t.parent_edge.assign(vertex_count, -1);
    std::vector<int> queue{0};
    std::vector<char> seen(vertex_count, 0);
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (auto [v, e] : t.adjacency[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            t.parent[v] = u;
            t.parent_edge[v] = e;
            t.depth[v] = t.depth[u] + 1;
            queue.push_back(v);
        }
    }
    return t;
}

int TreeTopology::edge_between(int a, int b) const {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
        throw std::out_of_range("vertex index out of range");
    if (parent[a] == b) return parent_edge[a];
    if (parent[b] == a) return parent_edge[b];
    return -1;
}

bool same_edge_set(const TreeTopology& a, const TreeTopology& b) {
    // Edges are normalized and sorted by from_edges.
    return a.vertex_count == b.vertex_count && a.edges == b.edges;
}

IsingTreeModel IsingTreeModel::create(TreeTopology topology, std::vector<double> theta) {
    if (theta.size() != topology.edges.size())
        throw std::invalid_argument("theta size must match edge count");
    IsingTreeModel m;
    m.alpha = 0.0;
    m.beta = 0.0;
    for (double th : theta) {
        if (!std::isfinite(th) || th == 0.0)
            throw std::invalid_argument("couplings must be finite and nonzero");
        double mag = std::fabs(th);
        if (m.beta == 0.0) {
            m.alpha = m.beta = mag;
        } else {
            m.alpha = std::min(m.alpha, mag);
            m.beta = std::max(m.beta, mag);
        }
    }
    m.topology = std::move(topology);
    m.theta = std::move(theta);
    return m;
}

double edge_correlation(const IsingTreeModel& model, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(model.theta.size()))
        throw std::out_of_range("edge index out of range");
    return std::tanh(model.theta[edge_index]);
}

double pair_correlation(const IsingTreeModel& model, int i, int j) {
    const auto& t = model.topology;
    if (i < 0 || i >= t.vertex_count || j < 0 || j >= t.vertex_count)
        throw std::out_of_range("vertex index out of range");
    if (i == j) throw std::invalid_argument("pair correlation needs two distinct vertices");
    double prod = 1.0;
    int a = i, b = j;
    while (a != b) {
        if (t.depth[a] < t.depth[b]) std::swap(a, b);
        prod *= std::tanh(model.theta[t.parent_edge[a]]);
        a = t.parent[a];
    }
    return prod;
}

double log_pmf(const IsingTreeModel& model, const SpinVector& spins) {
    const auto& t = model.topology;
    if (static_cast<int>(spins.size()) != t.vertex_count)
        throw std::invalid_argument("spin vector length must equal vertex count");
    for (int8_t s : spins)
        if (s != 1 && s != -1) throw std::invalid_argument("spins must be -1 or +1");
    double lp = -std::log(2.0);
    for (size_t e = 0; e < t.edges.size(); ++e) {
        auto [a, b] = t.edges[e];
        double mu = std::tanh(model.theta[e]);
        lp += std::log(0.5 * (1.0 + spins[a] * spins[b] * mu));
    }
    return lp;
}

double mutual_information(double mu) {
    if (!(std::fabs(mu) < 1.0))
        throw std::domain_error("mutual information requires |mu| < 1");
    if (mu == 0.0) return 0.0;
    return 0.5 * ((1.0 - mu) * std::log2(1.0 - mu) + (1.0 + mu) * std::log2(1.0 + mu));
}

std::vector<double> path_products_from(const TreeTopology& topology,
                                       const std::vector<double>& weights,
                                       int source) {
    if (weights.size() != topology.edges.size())
        throw std::invalid_argument("weights size must match edge count");
    if (source < 0 || source >= topology.vertex_count)
        throw std::out_of_range("vertex index out of range");
    std::vector<double> out(topology.vertex_count, 0.0);
    out[source] = 1.0;
    std::vector<int> stack{source};
    std::vector<char> seen(topology.vertex_count, 0);
    seen[source] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, e] : topology.adjacency[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            out[v] = out[u] * weights[e];
            stack.push_back(v);
        }
    }
    return out;
}

} // namespace htree
