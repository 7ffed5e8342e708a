#include "htree/channel_sampler.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "htree/rng.hpp"

namespace htree {

NoiseChannel NoiseChannel::create(double q) {
    if (!(q >= 0.0 && q <= 0.5)) throw std::invalid_argument("flip probability must be in [0, 0.5]");
    return NoiseChannel{q, 1.0 - 2.0 * q};
}

SampleBatch sample_hidden(const IsingTreeModel& model, int64_t n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("draw count must be >= 1");
    const auto& t = model.topology;
    const int p = t.vertex_count;

    // Parent-before-child order: vertices bucketed by depth.
    int max_depth = 0;
    for (int v = 0; v < p; ++v) max_depth = std::max(max_depth, t.depth[v]);
    std::vector<int> order;
    order.reserve(p);
    {
        std::vector<std::vector<int>> buckets(max_depth + 1);
        for (int v = 0; v < p; ++v) buckets[t.depth[v]].push_back(v);
        for (auto& b : buckets)
            for (int v : b) order.push_back(v);
    }
    std::vector<double> p_same(p, 0.0);
    for (int v = 0; v < p; ++v)
        if (v != 0) p_same[v] = 0.5 * (1.0 + std::tanh(model.theta[t.parent_edge[v]]));

    SampleBatch batch;
    batch.vertex_count = p;
    batch.draws = n;
    batch.kind = SampleKind::hidden;
    batch.q_used = 0.0;
    batch.seed = seed;
    batch.data.resize(static_cast<size_t>(n) * p);

    Rng rng(seed);
    for (int64_t d = 0; d < n; ++d) {
        int8_t* row = batch.data.data() + static_cast<size_t>(d) * p;
        for (int v : order) {
            if (v == 0) {
                row[0] = rng.next_bool() ? int8_t{1} : int8_t{-1};
            } else {
                int8_t par = row[t.parent[v]];
                row[v] = (rng.next_double() < p_same[v]) ? par : static_cast<int8_t>(-par);
            }
        }
    }
    return batch;
}

SampleBatch apply_channel(const SampleBatch& batch, const NoiseChannel& channel,
                          uint64_t seed) {
    if (batch.kind != SampleKind::hidden)
        throw std::invalid_argument("channel applies to hidden samples");
    SampleBatch out;
    out.vertex_count = batch.vertex_count;
    out.draws = batch.draws;
    out.kind = SampleKind::noisy;
    out.q_used = channel.q;
    out.seed = seed;
    out.data = batch.data;
    if (channel.q > 0.0) {
        Rng rng(seed);
        for (auto& s : out.data)
            if (rng.next_double() < channel.q) s = static_cast<int8_t>(-s);
    }
    return out;
}

CorrelationTable empirical_correlations(const SampleBatch& batch) {
    const int p = batch.vertex_count;
    const int64_t n = batch.draws;
    if (p < 1 || n < 1 || batch.data.size() != static_cast<size_t>(n) * p)
        throw std::invalid_argument("batch shape is inconsistent");

    // Column bitsets: bit d of column v is set when spin v of draw d is +1.
    // Disagreement counts then reduce to XOR + popcount; slack bits beyond n
    // are zero in every column and cancel in the XOR.
    const size_t words = static_cast<size_t>((n + 63) / 64);
    std::vector<uint64_t> cols(words * p, 0);
    for (int64_t d = 0; d < n; ++d) {
        const int8_t* row = batch.data.data() + static_cast<size_t>(d) * p;
        const size_t w = static_cast<size_t>(d >> 6);
        const uint64_t bit = 1ULL << (d & 63);
        for (int v = 0; v < p; ++v)
            if (row[v] > 0) cols[static_cast<size_t>(v) * words + w] |= bit;
    }

    CorrelationTable table;
    table.vertex_count = p;
    table.values.assign(p, std::vector<double>(p, 1.0));
    for (int i = 0; i < p; ++i) {
        const uint64_t* ci = cols.data() + static_cast<size_t>(i) * words;
        for (int j = i + 1; j < p; ++j) {
            const uint64_t* cj = cols.data() + static_cast<size_t>(j) * words;
            int64_t diff = 0;
            for (size_t w = 0; w < words; ++w) diff += std::popcount(ci[w] ^ cj[w]);
            double value = static_cast<double>(n - 2 * diff) / static_cast<double>(n);
            table.values[i][j] = value;
            table.values[j][i] = value;
        }
    }
    return table;
}

} // namespace htree
