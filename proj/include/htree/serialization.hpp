#pragma once

#include <string>

#include "htree/channel_sampler.hpp"
#include "htree/predictive_estimator.hpp"
#include "htree/tree_model.hpp"

namespace htree {

// Model JSON: {"p": int, "edges": [[i, j, theta], ...]}.
std::string model_to_json(const IsingTreeModel& model);
IsingTreeModel model_from_json(const std::string& text);

// Bare topology JSON: {"p": int, "edges": [[i, j], ...]}.
std::string topology_to_json(const TreeTopology& topology);
TreeTopology topology_from_json(const std::string& text);

// Fitted distribution JSON: {"p": int, "edges": [[i, j, mu], ...], "q": double}.
std::string fitted_to_json(const FittedTreeDistribution& dist);
FittedTreeDistribution fitted_from_json(const std::string& text);

// Sample CSV: a comment header line carrying p, n, kind, q, seed, then one
// row of comma-separated -1/+1 entries per draw.
std::string batch_to_csv(const SampleBatch& batch);
SampleBatch batch_from_csv(const std::string& text);

// Doubles are printed with snprintf("%.17g"): round-trippable, "inf" for
// infinities.
std::string format_double(double value);

} // namespace htree
