#include "htree/experiment_harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "htree/channel_sampler.hpp"
#include "htree/moments.hpp"
#include "htree/predictive_estimator.hpp"
#include "htree/rng.hpp"
#include "htree/serialization.hpp"
#include "htree/structure_learner.hpp"
#include "htree/theory_bounds.hpp"

namespace htree {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
// Stream tags keep the hidden-sample, channel, and subset draws of one
// trial on unrelated substreams of the trial seed.
constexpr uint64_t kHiddenStream = 0x48a5f3c1d2e9b701ULL;
constexpr uint64_t kChannelStream = 0xc3d2e1f009876543ULL;
constexpr uint64_t kSubsetStream = 0x5afe00d1cafe4321ULL;

int line_of_offset(const std::string& text, size_t offset) {
    int line = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

int line_of_key(const std::string& text, const std::string& key) {
    size_t pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos) return 0;
    return line_of_offset(text, pos);
}

[[noreturn]] void fail_field(const std::string& text, const std::string& key,
                             const std::string& what) {
    throw ConfigError("'" + key + "' " + what, line_of_key(text, key));
}

const char* task_name(Task t) {
    switch (t) {
        case Task::structure: return "structure";
        case Task::predictive: return "predictive";
        case Task::moments: return "moments";
    }
    return "structure";
}

const char* kind_name(TreeKind k) {
    switch (k) {
        case TreeKind::chain: return "chain";
        case TreeKind::star: return "star";
        case TreeKind::random_tree: return "random";
    }
    return "chain";
}

const char* rule_name(ThetaRule r) {
    switch (r) {
        case ThetaRule::constant: return "constant";
        case ThetaRule::alternating: return "alternating";
        case ThetaRule::random_rule: return "random";
    }
    return "constant";
}

struct TrialOut {
    int failed = 0;
    double metric = 0.0;
};

using TrialFn = std::function<TrialOut(const IsingTreeModel&, double q, int64_t n,
                                       uint64_t seed)>;

CorrelationTable noisy_trial_correlations(const IsingTreeModel& model, double q,
                                          int64_t n, uint64_t seed) {
    SampleBatch hidden = sample_hidden(model, n, mix_seed(seed, kHiddenStream));
    SampleBatch noisy = apply_channel(hidden, NoiseChannel::create(q),
                                      mix_seed(seed, kChannelStream));
    return empirical_correlations(noisy);
}

double missed_edge_fraction(const TreeTopology& estimate, const TreeTopology& truth) {
    // Both edge lists are normalized and sorted.
    size_t common = 0, a = 0, b = 0;
    while (a < estimate.edges.size() && b < truth.edges.size()) {
        if (estimate.edges[a] < truth.edges[b]) ++a;
        else if (truth.edges[b] < estimate.edges[a]) ++b;
        else { ++common; ++a; ++b; }
    }
    return 1.0 - static_cast<double>(common) / static_cast<double>(truth.edges.size());
}

HeatmapResult run_engine(const ExperimentConfig& cfg, int worker_count,
                         const TrialFn& trial) {
    const IsingTreeModel model = build_model(cfg.model);
    const size_t Q = cfg.q_grid.size();
    const size_t N = cfg.n_grid.size();
    const size_t T = static_cast<size_t>(cfg.trials);
    const size_t total = Q * N * T;

    std::vector<TrialOut> results(total);
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;

    auto work = [&]() {
        for (;;) {
            size_t idx = cursor.fetch_add(1, std::memory_order_relaxed);
            if (idx >= total) return;
            size_t qi = idx / (N * T);
            size_t rem = idx % (N * T);
            size_t ni = rem / T;
            size_t t = rem % T;
            uint64_t seed =
                mix_seed(mix_seed(mix_seed(cfg.master_seed, qi), ni), t);
            try {
                results[idx] = trial(model, cfg.q_grid[qi], cfg.n_grid[ni], seed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                cursor.store(total, std::memory_order_relaxed);
                return;
            }
        }
    };

    const int workers = resolve_workers(worker_count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    HeatmapResult out;
    out.task = cfg.task;
    out.q_grid = cfg.q_grid;
    out.n_grid = cfg.n_grid;
    out.cells.reserve(Q * N);
    for (size_t qi = 0; qi < Q; ++qi) {
        BoundInputs bi;
        bi.p = model.topology.vertex_count;
        bi.alpha = model.alpha;
        bi.beta = model.beta;
        bi.q = cfg.q_grid[qi];
        bi.delta = cfg.delta;
        bi.eta = cfg.eta;
        double suff, nec;
        if (cfg.task == Task::predictive) {
            suff = n_sufficient_predictive(bi);
            try {
                nec = n_necessary_predictive(bi);
            } catch (const std::invalid_argument&) {
                nec = std::nan("");
            }
        } else {
            suff = n_sufficient_structure(bi);
            nec = n_necessary_structure(bi);
        }
        for (size_t ni = 0; ni < N; ++ni) {
            HeatmapCell cell;
            cell.q = cfg.q_grid[qi];
            cell.n = cfg.n_grid[ni];
            cell.trials = cfg.trials;
            double metric_sum = 0.0;
            for (size_t t = 0; t < T; ++t) {
                const TrialOut& r = results[(qi * N + ni) * T + t];
                cell.failures += r.failed;
                metric_sum += r.metric;
            }
            double rate = static_cast<double>(cell.failures) / cfg.trials;
            cell.error_rate = rate;
            cell.stderr_rate = std::sqrt(rate * (1.0 - rate) / cfg.trials);
            cell.mean_metric = metric_sum / cfg.trials;
            cell.bound_n_sufficient = suff;
            cell.bound_n_necessary = nec;
            out.cells.push_back(cell);
        }
    }
    return out;
}

TrialOut structure_trial(const IsingTreeModel& model, double q, int64_t n,
                         uint64_t seed) {
    CorrelationTable corr = noisy_trial_correlations(model, q, n, seed);
    TreeTopology estimate = chow_liu(corr);
    TrialOut out;
    out.failed = structure_error(estimate, model.topology);
    out.metric = missed_edge_fraction(estimate, model.topology);
    return out;
}

} // namespace

int resolve_workers(int requested) {
    if (requested > 0) return std::min(requested, 256);
    if (const char* env = std::getenv("HTREE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return std::min(w, 256);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

IsingTreeModel build_model(const ModelSpec& spec) {
    if (spec.p < 2) throw std::invalid_argument("model needs at least 2 vertices");
    if (!(spec.alpha > 0.0 && spec.alpha <= spec.beta))
        throw std::invalid_argument("need 0 < alpha <= beta");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(spec.p - 1);
    switch (spec.kind) {
        case TreeKind::chain:
            for (int v = 1; v < spec.p; ++v) edges.emplace_back(v - 1, v);
            break;
        case TreeKind::star:
            for (int v = 1; v < spec.p; ++v) edges.emplace_back(0, v);
            break;
        case TreeKind::random_tree: {
            Rng rng(mix_seed(spec.model_seed, 0x7309a5b2c8d1e4f6ULL));
            for (int v = 1; v < spec.p; ++v)
                edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
            break;
        }
    }
    TreeTopology topo = TreeTopology::from_edges(spec.p, edges);

    std::vector<double> theta(topo.edges.size());
    switch (spec.theta_rule) {
        case ThetaRule::constant:
            for (auto& th : theta) th = spec.beta;
            break;
        case ThetaRule::alternating:
            for (size_t e = 0; e < theta.size(); ++e)
                theta[e] = (e % 2 == 0) ? spec.beta : spec.alpha;
            break;
        case ThetaRule::random_rule: {
            Rng rng(mix_seed(spec.model_seed, 0x1f2e3d4c5b6a7988ULL));
            for (auto& th : theta) {
                double mag = spec.alpha + (spec.beta - spec.alpha) * rng.next_double();
                th = rng.next_bool() ? mag : -mag;
            }
            break;
        }
    }
    return IsingTreeModel::create(std::move(topo), std::move(theta));
}

ExperimentConfig parse_config(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(e.what(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object", 1);

    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "task") {
            if (!value.is_string()) fail_field(text, key, "must be a string");
            std::string s = value.get<std::string>();
            if (s == "structure") cfg.task = Task::structure;
            else if (s == "predictive") cfg.task = Task::predictive;
            else if (s == "moments") cfg.task = Task::moments;
            else fail_field(text, key, "must be structure, predictive, or moments");
        } else if (key == "model") {
            if (!value.is_object()) fail_field(text, key, "must be an object");
        } else if (key == "q_grid") {
            if (!value.is_array() || value.empty())
                fail_field(text, key, "must be a nonempty array");
            double prev = -1.0;
            for (const auto& v : value) {
                if (!v.is_number()) fail_field(text, key, "entries must be numbers");
                double q = v.get<double>();
                if (!(q >= 0.0 && q < 0.5))
                    fail_field(text, key, "entries must lie in [0, 0.5)");
                if (q <= prev) fail_field(text, key, "entries must be strictly increasing");
                prev = q;
                cfg.q_grid.push_back(q);
            }
        } else if (key == "n_grid") {
            if (!value.is_array() || value.empty())
                fail_field(text, key, "must be a nonempty array");
            int64_t prev = 0;
            for (const auto& v : value) {
                if (!v.is_number_integer()) fail_field(text, key, "entries must be integers");
                int64_t n = v.get<int64_t>();
                if (n < 1) fail_field(text, key, "entries must be >= 1");
                if (n <= prev) fail_field(text, key, "entries must be strictly increasing");
                prev = n;
                cfg.n_grid.push_back(n);
            }
        } else if (key == "trials") {
            if (!value.is_number_integer() || value.get<int64_t>() < 1)
                fail_field(text, key, "must be an integer >= 1");
            if (value.get<int64_t>() > 1000000) fail_field(text, key, "is implausibly large");
            cfg.trials = value.get<int>();
        } else if (key == "eta") {
            if (!value.is_number() || !(value.get<double>() > 0.0))
                fail_field(text, key, "must be a positive number");
            cfg.eta = value.get<double>();
        } else if (key == "delta") {
            if (!value.is_number()) fail_field(text, key, "must be a number");
            double d = value.get<double>();
            if (!(d > 0.0 && d < 1.0)) fail_field(text, key, "must lie in (0, 1)");
            cfg.delta = d;
        } else if (key == "master_seed") {
            if (!value.is_number_unsigned()) fail_field(text, key, "must be a nonnegative integer");
            cfg.master_seed = value.get<uint64_t>();
        } else if (key == "output_path") {
            if (!value.is_string() || value.get<std::string>().empty())
                fail_field(text, key, "must be a nonempty string");
            cfg.output_path = value.get<std::string>();
        } else {
            fail_field(text, key, "is not a recognized config field");
        }
    }

    if (!j.contains("task")) throw ConfigError("'task' is required", 1);
    if (!j.contains("model")) throw ConfigError("'model' is required", 1);
    if (!j.contains("q_grid")) throw ConfigError("'q_grid' is required", 1);
    if (!j.contains("n_grid")) throw ConfigError("'n_grid' is required", 1);
    if (!j.contains("trials")) throw ConfigError("'trials' is required", 1);

    const auto& m = j["model"];
    for (const auto& [key, value] : m.items()) {
        if (key == "kind") {
            if (!value.is_string()) fail_field(text, key, "must be a string");
            std::string s = value.get<std::string>();
            if (s == "chain") cfg.model.kind = TreeKind::chain;
            else if (s == "star") cfg.model.kind = TreeKind::star;
            else if (s == "random") cfg.model.kind = TreeKind::random_tree;
            else fail_field(text, key, "must be chain, star, or random");
        } else if (key == "p") {
            if (!value.is_number_integer() || value.get<int64_t>() < 2)
                fail_field(text, key, "must be an integer >= 2");
            if (value.get<int64_t>() > 100000) fail_field(text, key, "is implausibly large");
            cfg.model.p = value.get<int>();
        } else if (key == "alpha") {
            if (!value.is_number() || !(value.get<double>() > 0.0))
                fail_field(text, key, "must be a positive number");
            cfg.model.alpha = value.get<double>();
        } else if (key == "beta") {
            if (!value.is_number() || !(value.get<double>() > 0.0))
                fail_field(text, key, "must be a positive number");
            cfg.model.beta = value.get<double>();
        } else if (key == "theta_rule") {
            if (!value.is_string()) fail_field(text, key, "must be a string");
            std::string s = value.get<std::string>();
            if (s == "constant") cfg.model.theta_rule = ThetaRule::constant;
            else if (s == "alternating") cfg.model.theta_rule = ThetaRule::alternating;
            else if (s == "random") cfg.model.theta_rule = ThetaRule::random_rule;
            else fail_field(text, key, "must be constant, alternating, or random");
        } else if (key == "model_seed") {
            if (!value.is_number_unsigned()) fail_field(text, key, "must be a nonnegative integer");
            cfg.model.model_seed = value.get<uint64_t>();
        } else {
            fail_field(text, key, "is not a recognized model field");
        }
    }
    if (!m.contains("kind")) fail_field(text, "model", "needs a 'kind' field");
    if (!m.contains("p")) fail_field(text, "model", "needs a 'p' field");
    if (!m.contains("alpha")) fail_field(text, "model", "needs an 'alpha' field");
    if (!m.contains("beta")) fail_field(text, "model", "needs a 'beta' field");
    if (!(cfg.model.alpha <= cfg.model.beta))
        fail_field(text, "alpha", "must not exceed beta");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file", 0);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_config(text);
}

std::string config_to_json(const ExperimentConfig& cfg) {
    ordered_json j;
    j["task"] = task_name(cfg.task);
    ordered_json m;
    m["kind"] = kind_name(cfg.model.kind);
    m["p"] = cfg.model.p;
    m["alpha"] = cfg.model.alpha;
    m["beta"] = cfg.model.beta;
    m["theta_rule"] = rule_name(cfg.model.theta_rule);
    m["model_seed"] = cfg.model.model_seed;
    j["model"] = m;
    j["q_grid"] = cfg.q_grid;
    j["n_grid"] = cfg.n_grid;
    j["trials"] = cfg.trials;
    j["eta"] = cfg.eta;
    j["delta"] = cfg.delta;
    j["master_seed"] = cfg.master_seed;
    j["output_path"] = cfg.output_path;
    return j.dump(2) + "\n";
}

std::string config_hash(const ExperimentConfig& cfg) {
    std::string canonical = config_to_json(cfg);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

HeatmapResult run_structure_sweep(const ExperimentConfig& cfg, int worker_count) {
    if (cfg.task != Task::structure)
        throw std::invalid_argument("config task must be structure");
    return run_engine(cfg, worker_count, structure_trial);
}

HeatmapResult run_predictive_sweep(const ExperimentConfig& cfg, int worker_count) {
    if (cfg.task != Task::predictive)
        throw std::invalid_argument("config task must be predictive");
    double eta = cfg.eta;
    return run_engine(cfg, worker_count,
                      [eta](const IsingTreeModel& model, double q, int64_t n,
                            uint64_t seed) {
                          CorrelationTable corr = noisy_trial_correlations(model, q, n, seed);
                          TreeTopology estimate = chow_liu(corr);
                          FittedTreeDistribution fitted = fit_distribution(estimate, corr, q);
                          double s = sstv2(model, fitted);
                          TrialOut out;
                          out.failed = (s > eta) ? 1 : 0;
                          out.metric = s;
                          return out;
                      });
}

HeatmapResult run_moments_sweep(const ExperimentConfig& cfg, int worker_count) {
    if (cfg.task != Task::moments)
        throw std::invalid_argument("config task must be moments");
    return run_engine(
        cfg, worker_count,
        [](const IsingTreeModel& model, double q, int64_t n, uint64_t seed) {
            CorrelationTable corr = noisy_trial_correlations(model, q, n, seed);
            TreeTopology estimate = chow_liu(corr);
            FittedTreeDistribution fitted = fit_distribution(estimate, corr, q);
            double tv = sstv2(model, fitted);

            const int p = model.topology.vertex_count;
            Rng rng(mix_seed(seed, kSubsetStream));
            std::vector<int> pool(p);
            for (int v = 0; v < p; ++v) pool[v] = v;

            TrialOut out;
            const int max_pairs = std::min(p, 8) / 2;
            for (int rep = 0; rep < 4; ++rep) {
                int size = 2 * (1 + static_cast<int>(rng.next_below(max_pairs)));
                // partial Fisher-Yates over the vertex pool
                for (int k = 0; k < size; ++k) {
                    int j = k + static_cast<int>(rng.next_below(p - k));
                    std::swap(pool[k], pool[j]);
                }
                std::vector<int> subset(pool.begin(), pool.begin() + size);
                double est = estimate_moment(estimate, corr, q, subset);
                double exact = exact_moment(model, subset);
                double err = std::fabs(est - exact);
                out.metric = std::max(out.metric, err);
                if (err > 2.0 * size * tv + 1e-12) out.failed = 1;
            }
            return out;
        });
}

HeatmapResult run_sweep(const ExperimentConfig& cfg, int worker_count) {
    switch (cfg.task) {
        case Task::structure: return run_structure_sweep(cfg, worker_count);
        case Task::predictive: return run_predictive_sweep(cfg, worker_count);
        case Task::moments: return run_moments_sweep(cfg, worker_count);
    }
    throw std::invalid_argument("unknown task");
}

std::string heatmap_to_csv(const HeatmapResult& result) {
    std::string out =
        "q,n,trials,failures,error_rate,stderr,mean_metric,"
        "bound_n_sufficient,bound_n_necessary\n";
    for (const auto& c : result.cells) {
        out += format_double(c.q);
        out += ',';
        out += std::to_string(c.n);
        out += ',';
        out += std::to_string(c.trials);
        out += ',';
        out += std::to_string(c.failures);
        out += ',';
        out += format_double(c.error_rate);
        out += ',';
        out += format_double(c.stderr_rate);
        out += ',';
        out += format_double(c.mean_metric);
        out += ',';
        out += format_double(c.bound_n_sufficient);
        out += ',';
        out += format_double(c.bound_n_necessary);
        out += '\n';
    }
    return out;
}

std::string write_sweep_outputs(const ExperimentConfig& cfg, const HeatmapResult& result) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_path);
    fs::path dir(cfg.output_path);
    {
        std::ofstream csv(dir / "heatmap.csv", std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write heatmap.csv");
        csv << heatmap_to_csv(result);
    }
    ordered_json manifest;
    manifest["version"] = kVersion;
    manifest["task"] = task_name(result.task);
    manifest["config_hash"] = config_hash(cfg);
    manifest["master_seed"] = cfg.master_seed;
    manifest["cells"] = result.cells.size();
    manifest["output"] = "heatmap.csv";
    std::string text = manifest.dump(2) + "\n";
    std::ofstream mf(dir / "manifest.json", std::ios::binary);
    if (!mf) throw std::runtime_error("cannot write manifest.json");
    mf << text;
    return text;
}

ExperimentConfig desk_structure_preset() {
    ExperimentConfig cfg;
    cfg.task = Task::structure;
    cfg.model.kind = TreeKind::chain;
    cfg.model.p = 15;
    cfg.model.alpha = std::atanh(0.8);
    cfg.model.beta = std::atanh(0.8);
    cfg.model.theta_rule = ThetaRule::constant;
    cfg.model.model_seed = 1;
    cfg.q_grid = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35};
    cfg.n_grid = {200, 500, 1250, 3200, 8000, 20000, 50000, 125000};
    cfg.trials = 100;
    cfg.eta = 0.05;
    cfg.delta = 0.1;
    cfg.master_seed = 20240817;
    cfg.output_path = "out/structure_desk";
    return cfg;
}

ExperimentConfig desk_predictive_preset() {
    ExperimentConfig cfg = desk_structure_preset();
    cfg.task = Task::predictive;
    cfg.model.alpha = std::atanh(0.2);
    cfg.model.theta_rule = ThetaRule::random_rule;
    cfg.model.model_seed = 7;
    cfg.eta = 0.05;
    cfg.output_path = "out/predictive_desk";
    return cfg;
}

ExperimentConfig desk_moments_preset() {
    ExperimentConfig cfg;
    cfg.task = Task::moments;
    cfg.model.kind = TreeKind::random_tree;
    cfg.model.p = 12;
    cfg.model.alpha = std::atanh(0.2);
    cfg.model.beta = std::atanh(0.8);
    cfg.model.theta_rule = ThetaRule::random_rule;
    cfg.model.model_seed = 11;
    cfg.q_grid = {0.0, 0.1, 0.2, 0.3};
    cfg.n_grid = {100, 1000, 10000, 100000};
    cfg.trials = 50;
    cfg.eta = 0.05;
    cfg.delta = 0.1;
    cfg.master_seed = 31337;
    cfg.output_path = "out/moments_desk";
    return cfg;
}

ExperimentConfig full_scale_structure_preset() {
    ExperimentConfig cfg;
    cfg.task = Task::structure;
    cfg.model.kind = TreeKind::chain;
    cfg.model.p = 100;
    cfg.model.alpha = std::atanh(0.2);
    cfg.model.beta = std::atanh(0.8);
    cfg.model.theta_rule = ThetaRule::alternating;
    cfg.model.model_seed = 1;
    cfg.q_grid = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45};
    cfg.n_grid = {1000,   3200,    10000,   32000,    100000,
                  320000, 1000000, 3200000, 10000000, 32000000};
    cfg.trials = 100;
    cfg.eta = 0.05;
    cfg.delta = 0.05;
    cfg.master_seed = 100;
    cfg.output_path = "out/structure_p100";
    return cfg;
}

ExperimentConfig full_scale_predictive_preset() {
    ExperimentConfig cfg;
    cfg.task = Task::predictive;
    cfg.model.kind = TreeKind::chain;
    cfg.model.p = 31;
    cfg.model.alpha = std::atanh(0.2);
    cfg.model.beta = 1.0;
    cfg.model.theta_rule = ThetaRule::random_rule;
    cfg.model.model_seed = 31;
    cfg.q_grid = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45};
    cfg.n_grid = {1000,   3200,    10000,   32000,    100000,
                  320000, 1000000, 3200000, 10000000, 32000000};
    cfg.trials = 100;
    cfg.eta = 0.03;
    cfg.delta = 0.05;
    cfg.master_seed = 31;
    cfg.output_path = "out/predictive_p31";
    return cfg;
}

} // namespace htree
