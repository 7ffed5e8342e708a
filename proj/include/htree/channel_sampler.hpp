#pragma once

#include <cstdint>
#include <vector>

#include "htree/tree_model.hpp"

namespace htree {

// Memoryless symmetric flip channel. q in [0, 0.5]; flip_scale = 1 - 2q.
struct NoiseChannel {
    double q = 0.0;
    double flip_scale = 1.0;

    static NoiseChannel create(double q);
};

enum class SampleKind { hidden, noisy };

// n independent configurations, row-major: data[t*p + v] is spin v of
// draw t, stored as -1/+1.
struct SampleBatch {
    int vertex_count = 0;
    int64_t draws = 0;
    SampleKind kind = SampleKind::hidden;
    double q_used = 0.0;
    uint64_t seed = 0;
    std::vector<int8_t> data;
};

// Symmetric matrix of empirical products: values[i][j] = mean of X_i X_j,
// values[i][i] = 1.
struct CorrelationTable {
    int vertex_count = 0;
    std::vector<std::vector<double>> values;
};

// Exact i.i.d. sampling from the model via root-to-leaf propagation.
SampleBatch sample_hidden(const IsingTreeModel& model, int64_t n, uint64_t seed);

// Flips each entry independently with probability channel.q. The input
// batch must have kind == hidden. q == 0 copies the data unchanged.
SampleBatch apply_channel(const SampleBatch& batch, const NoiseChannel& channel,
                          uint64_t seed);

CorrelationTable empirical_correlations(const SampleBatch& batch);

} // namespace htree
