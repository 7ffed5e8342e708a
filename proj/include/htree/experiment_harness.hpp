#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "htree/tree_model.hpp"

namespace htree {

enum class Task { structure, predictive, moments };
enum class TreeKind { chain, star, random_tree };
enum class ThetaRule { constant, alternating, random_rule };

// Recipe for the ground-truth model of a sweep. chain: edges (v-1,v);
// star: center 0; random: each v >= 1 attaches to a uniform earlier vertex
// drawn from model_seed. constant: every |theta| = beta; alternating:
// beta, alpha, beta, ... in edge order; random: |theta| uniform in
// [alpha, beta], sign uniform, drawn from model_seed.
struct ModelSpec {
    TreeKind kind = TreeKind::chain;
    int p = 2;
    double alpha = 0.0;
    double beta = 0.0;
    ThetaRule theta_rule = ThetaRule::constant;
    uint64_t model_seed = 0;
};

struct ExperimentConfig {
    Task task = Task::structure;
    ModelSpec model;
    std::vector<double> q_grid;
    std::vector<int64_t> n_grid;
    int trials = 0;
    double eta = 0.1;    // predictive failure threshold
    double delta = 0.1;  // confidence level for the bound overlay columns
    uint64_t master_seed = 0;
    std::string output_path = "out";
};

// One (q,n) cell, aggregated over trials.
struct HeatmapCell {
    double q = 0.0;
    int64_t n = 0;
    int trials = 0;
    int failures = 0;
    double error_rate = 0.0;
    double stderr_rate = 0.0; // sqrt(r(1-r)/trials)
    double mean_metric = 0.0;
    double bound_n_sufficient = 0.0;
    double bound_n_necessary = 0.0;
};

struct HeatmapResult {
    Task task = Task::structure;
    std::vector<double> q_grid;
    std::vector<int64_t> n_grid;
    std::vector<HeatmapCell> cells; // row-major: q outer, n inner
};

// Config errors carry a 1-based line number into the source text when one
// can be attributed (0 otherwise).
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(const std::string& msg, int line_) : std::runtime_error(msg), line(line_) {}
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

IsingTreeModel build_model(const ModelSpec& spec);

// worker_count <= 0 means auto: HTREE_WORKERS if set, else hardware
// concurrency. Results are byte-identical for any worker count.
HeatmapResult run_structure_sweep(const ExperimentConfig& cfg, int worker_count = 0);
HeatmapResult run_predictive_sweep(const ExperimentConfig& cfg, int worker_count = 0);
HeatmapResult run_moments_sweep(const ExperimentConfig& cfg, int worker_count = 0);
HeatmapResult run_sweep(const ExperimentConfig& cfg, int worker_count = 0);

std::string heatmap_to_csv(const HeatmapResult& result);

// Writes heatmap.csv and manifest.json under cfg.output_path (created if
// missing). Returns the manifest JSON text.
std::string write_sweep_outputs(const ExperimentConfig& cfg, const HeatmapResult& result);

// FNV-1a 64 over the canonical serialized config, as a 16-digit hex string.
std::string config_hash(const ExperimentConfig& cfg);

std::string config_to_json(const ExperimentConfig& cfg);

int resolve_workers(int requested);

// Shipped presets (mirrored by the files under configs/).
ExperimentConfig desk_structure_preset();
ExperimentConfig desk_predictive_preset();
ExperimentConfig desk_moments_preset();
ExperimentConfig full_scale_structure_preset();
ExperimentConfig full_scale_predictive_preset();

} // namespace htree
