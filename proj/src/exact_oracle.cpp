#include "htree/exact_oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace htree {

namespace {

constexpr int kHiddenLimit = 20;
constexpr int kNoisyLimit = 14;

PmfTable enumerate_factorized(const TreeTopology& topology,
                              const std::vector<double>& edge_mu) {
    if (topology.vertex_count > kHiddenLimit)
        throw std::length_error("exact enumeration is limited to 20 vertices");
    if (edge_mu.size() != topology.edges.size())
        throw std::invalid_argument("edge parameter size must match edge count");
    const int p = topology.vertex_count;
    const size_t states = size_t{1} << p;
    PmfTable table;
    table.vertex_count = p;
    table.prob.assign(states, 0.0);
    const double base = std::ldexp(1.0, -(p - 1)) * 0.5; // 2^-p
    for (size_t s = 0; s < states; ++s) {
        double pr = base;
        for (size_t e = 0; e < topology.edges.size(); ++e) {
            auto [a, b] = topology.edges[e];
            // agreement bit: spins equal iff state bits equal
            bool agree = (((s >> a) ^ (s >> b)) & 1u) == 0;
            pr *= agree ? (1.0 + edge_mu[e]) : (1.0 - edge_mu[e]);
        }
        table.prob[s] = pr;
    }
    return table;
}

} // namespace

PmfTable enumerate_hidden(const IsingTreeModel& model) {
    std::vector<double> mu(model.theta.size());
    for (size_t e = 0; e < mu.size(); ++e) mu[e] = std::tanh(model.theta[e]);
    return enumerate_factorized(model.topology, mu);
}

PmfTable enumerate_tree(const TreeTopology& topology,
                        const std::vector<double>& edge_mu) {
    for (double m : edge_mu)
        if (!(m >= -1.0 && m <= 1.0))
            throw std::invalid_argument("edge correlations must lie in [-1, 1]");
    return enumerate_factorized(topology, edge_mu);
}

PmfTable enumerate_noisy(const IsingTreeModel& model, double q) {
    if (!(q >= 0.0 && q <= 0.5)) throw std::invalid_argument("flip probability must be in [0, 0.5]");
    if (model.topology.vertex_count > kNoisyLimit)
        throw std::length_error("noisy enumeration is limited to 14 vertices");
    PmfTable hidden = enumerate_hidden(model);
    const int p = hidden.vertex_count;
    // Coordinate-wise binary convolution with the flip kernel (1-q, q).
    for (int v = 0; v < p; ++v) {
        const size_t bit = size_t{1} << v;
        for (size_t s = 0; s < hidden.prob.size(); ++s) {
            if (s & bit) continue;
            double a = hidden.prob[s];
            double b = hidden.prob[s | bit];
            hidden.prob[s] = (1.0 - q) * a + q * b;
            hidden.prob[s | bit] = q * a + (1.0 - q) * b;
        }
    }
    return hidden;
}

double oracle_moment(const PmfTable& table, const std::vector<int>& vertices) {
    uint32_t mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= table.vertex_count) throw std::out_of_range("vertex index out of range");
        uint32_t bit = 1u << v;
        if (mask & bit) throw std::invalid_argument("subset vertices must be distinct");
        mask |= bit;
    }
    double acc = 0.0;
    for (size_t s = 0; s < table.prob.size(); ++s) {
        int parity = std::popcount(static_cast<uint32_t>(s) & mask) & 1;
        acc += parity ? -table.prob[s] : table.prob[s];
    }
    return acc;
}

double oracle_tv(const PmfTable& a, const PmfTable& b) {
    if (a.vertex_count != b.vertex_count)
        throw std::invalid_argument("tables must share a vertex count");
    double l1 = 0.0;
    for (size_t s = 0; s < a.prob.size(); ++s) l1 += std::fabs(a.prob[s] - b.prob[s]);
    return 0.5 * l1;
}

double oracle_pairwise_tv_sup(const PmfTable& a, const PmfTable& b) {
    if (a.vertex_count != b.vertex_count)
        throw std::invalid_argument("tables must share a vertex count");
    const int p = a.vertex_count;
    double best = 0.0;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            // joint over (spin_i, spin_j), indexed 2*(i bit) + (j bit)
            double ja[4] = {0, 0, 0, 0}, jb[4] = {0, 0, 0, 0};
            for (size_t s = 0; s < a.prob.size(); ++s) {
                int idx = (((s >> i) & 1u) << 1) | ((s >> j) & 1u);
                ja[idx] += a.prob[s];
                jb[idx] += b.prob[s];
            }
            double l1 = 0.0;
            for (int k = 0; k < 4; ++k) l1 += std::fabs(ja[k] - jb[k]);
            best = std::max(best, 0.5 * l1);
        }
    return best;
}

} // namespace htree
