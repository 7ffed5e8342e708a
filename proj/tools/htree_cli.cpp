#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "htree/channel_sampler.hpp"
#include "htree/exact_oracle.hpp"
#include "htree/experiment_harness.hpp"
#include "htree/moments.hpp"
#include "htree/predictive_estimator.hpp"
#include "htree/rng.hpp"
#include "htree/serialization.hpp"
#include "htree/structure_learner.hpp"
#include "htree/theory_bounds.hpp"
#include "htree/tree_model.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<int> parse_subset(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::runtime_error("bad subset entry: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("subset must not be empty");
    return out;
}

htree::ExperimentConfig preset_by_name(const std::string& name) {
    if (name == "structure-desk") return htree::desk_structure_preset();
    if (name == "predictive-desk") return htree::desk_predictive_preset();
    if (name == "moments-desk") return htree::desk_moments_preset();
    if (name == "structure-p100") return htree::full_scale_structure_preset();
    if (name == "predictive-p31") return htree::full_scale_predictive_preset();
    throw std::runtime_error("unknown preset: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hidden-tree Ising models: sampling, learning, and bound evaluation"};
    app.set_version_flag("--version", "htree 0.1.0");
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "draw configurations from a model");
    std::string sample_model, sample_out;
    int64_t sample_n = 1000;
    uint64_t sample_seed = 0;
    double sample_q = 0.0;
    sample->add_option("--model", sample_model, "model JSON file")->required();
    sample->add_option("--n", sample_n, "number of draws")->required();
    sample->add_option("--seed", sample_seed, "RNG seed");
    sample->add_option("--q", sample_q, "flip probability (0 keeps hidden samples)");
    sample->add_option("--out", sample_out, "output CSV path (default stdout)");

    // learn
    auto* learn = app.add_subcommand("learn", "learn a tree from samples");
    std::string learn_data, learn_out;
    learn->add_option("--data", learn_data, "sample CSV file")->required();
    learn->add_option("--out", learn_out, "output topology JSON (default stdout)");

    // fit
    auto* fit = app.add_subcommand("fit", "fit edge correlations on a tree");
    std::string fit_data, fit_tree, fit_out;
    double fit_q = 0.0;
    fit->add_option("--data", fit_data, "sample CSV file")->required();
    fit->add_option("--q", fit_q, "channel flip probability")->required();
    fit->add_option("--tree", fit_tree, "topology JSON (default: learn from data)");
    fit->add_option("--out", fit_out, "output fitted JSON (default stdout)");

    // moments
    auto* moments = app.add_subcommand("moments", "estimate a subset moment");
    std::string mom_data, mom_tree, mom_model, mom_subset, mom_out;
    double mom_q = 0.0;
    moments->add_option("--data", mom_data, "sample CSV file")->required();
    moments->add_option("--q", mom_q, "channel flip probability")->required();
    moments->add_option("--subset", mom_subset, "comma-separated vertex list")->required();
    moments->add_option("--tree", mom_tree, "topology JSON (default: learn from data)");
    moments->add_option("--model", mom_model, "model JSON for the exact reference value");
    moments->add_option("--out", mom_out, "output JSON (default stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate sample-size bounds");
    htree::BoundInputs bi;
    bi.delta = 0.05;
    bi.eta = 0.1;
    bi.eta_s = 0.5;
    double bounds_n = 0.0;
    std::string bounds_out;
    bounds->add_option("--p", bi.p, "vertex count")->required();
    bounds->add_option("--alpha", bi.alpha, "minimum |coupling|")->required();
    bounds->add_option("--beta", bi.beta, "maximum |coupling|")->required();
    bounds->add_option("--q", bi.q, "flip probability");
    bounds->add_option("--delta", bi.delta, "failure probability");
    bounds->add_option("--eta", bi.eta, "pairwise-TV target");
    bounds->add_option("--eta-s", bi.eta_s, "symmetric-KL target");
    bounds->add_option("--n", bounds_n, "sample size for the derived thresholds");
    bounds->add_option("--out", bounds_out, "output JSON (default stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a heatmap experiment");
    std::string sweep_config, sweep_preset, sweep_out;
    int sweep_workers = 0;
    sweep->add_option("--config", sweep_config, "experiment config JSON");
    sweep->add_option("--preset", sweep_preset, "named built-in config");
    sweep->add_option("--out", sweep_out, "output directory override");
    sweep->add_option("--workers", sweep_workers, "worker threads (default: auto)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "enumerate an exact probability table");
    std::string oracle_model, oracle_out;
    double oracle_q = -1.0;
    oracle->add_option("--model", oracle_model, "model JSON file")->required();
    oracle->add_option("--q", oracle_q, "flip probability (omit for the hidden table)");
    oracle->add_option("--out", oracle_out, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sample) {
            htree::IsingTreeModel model = htree::model_from_json(read_file(sample_model));
            htree::SampleBatch batch = htree::sample_hidden(model, sample_n, sample_seed);
            if (sample_q > 0.0) {
                batch = htree::apply_channel(batch, htree::NoiseChannel::create(sample_q),
                                             htree::mix_seed(sample_seed, 0x6368616e6e656cULL));
            }
            write_output(sample_out, htree::batch_to_csv(batch));
        } else if (*learn) {
            htree::SampleBatch batch = htree::batch_from_csv(read_file(learn_data));
            htree::CorrelationTable corr = htree::empirical_correlations(batch);
            write_output(learn_out, htree::topology_to_json(htree::chow_liu(corr)));
        } else if (*fit) {
            htree::SampleBatch batch = htree::batch_from_csv(read_file(fit_data));
            htree::CorrelationTable corr = htree::empirical_correlations(batch);
            htree::TreeTopology tree = fit_tree.empty()
                                           ? htree::chow_liu(corr)
                                           : htree::topology_from_json(read_file(fit_tree));
            write_output(fit_out, htree::fitted_to_json(htree::fit_distribution(tree, corr, fit_q)));
        } else if (*moments) {
            htree::SampleBatch batch = htree::batch_from_csv(read_file(mom_data));
            htree::CorrelationTable corr = htree::empirical_correlations(batch);
            htree::TreeTopology tree = mom_tree.empty()
                                           ? htree::chow_liu(corr)
                                           : htree::topology_from_json(read_file(mom_tree));
            std::vector<int> subset = parse_subset(mom_subset);
            ordered_json j;
            j["subset"] = subset;
            j["estimate"] = htree::estimate_moment(tree, corr, mom_q, subset);
            if (!mom_model.empty()) {
                htree::IsingTreeModel model = htree::model_from_json(read_file(mom_model));
                j["exact"] = htree::exact_moment(model, subset);
            }
            write_output(mom_out, j.dump(2) + "\n");
        } else if (*bounds) {
            ordered_json j;
            j["n_sufficient_structure"] = htree::n_sufficient_structure(bi);
            j["n_necessary_structure"] = htree::n_necessary_structure(bi);
            j["n_sufficient_predictive"] = htree::n_sufficient_predictive(bi);
            try {
                j["n_necessary_predictive"] = htree::n_necessary_predictive(bi);
            } catch (const std::invalid_argument&) {
                j["n_necessary_predictive"] = nullptr;
            }
            j["n_sufficient_skl"] = htree::n_sufficient_skl(bi);
            j["loose_n_sufficient_structure"] = htree::loose_n_sufficient_structure(bi);
            j["loose_n_sufficient_predictive"] = htree::loose_n_sufficient_predictive(bi);
            ordered_json h;
            h["gamma"] = htree::gamma_fn(bi.beta, bi.q);
            h["k"] = htree::k_fn(bi.beta, bi.q);
            h["b"] = htree::b_fn(bi.beta, bi.q);
            h["s"] = htree::s_fn(bi.beta, bi.q);
            j["helpers"] = h;
            if (bounds_n > 0.0) {
                double eps = htree::eps_dagger(bi.p, bi.delta, bounds_n);
                j["eps_dagger"] = eps;
                j["tau_dagger"] = htree::tau_dagger(bi.beta, bi.q, eps);
                j["delta_fn"] = htree::delta_fn(bi.beta, bi.q, bi.p, bi.delta, bounds_n);
            }
            write_output(bounds_out, j.dump(2) + "\n");
        } else if (*sweep) {
            if (sweep_config.empty() == sweep_preset.empty()) {
                std::cerr << "sweep: pass exactly one of --config or --preset\n";
                return 2;
            }
            htree::ExperimentConfig cfg;
            try {
                cfg = sweep_config.empty() ? preset_by_name(sweep_preset)
                                           : htree::load_config(sweep_config);
            } catch (const htree::ConfigError& e) {
                std::cerr << sweep_config << ":" << e.line << ": " << e.what() << "\n";
                return 2;
            } catch (const std::runtime_error& e) {
                std::cerr << "sweep: " << e.what() << "\n";
                return 2;
            }
            if (!sweep_out.empty()) cfg.output_path = sweep_out;
            htree::HeatmapResult result = htree::run_sweep(cfg, sweep_workers);
            htree::write_sweep_outputs(cfg, result);
            std::cout << cfg.output_path << "/heatmap.csv: " << result.cells.size()
                      << " cells\n";
        } else if (*oracle) {
            htree::IsingTreeModel model = htree::model_from_json(read_file(oracle_model));
            htree::PmfTable table = (oracle_q >= 0.0)
                                        ? htree::enumerate_noisy(model, oracle_q)
                                        : htree::enumerate_hidden(model);
            std::string out = "state,prob\n";
            for (size_t s = 0; s < table.prob.size(); ++s) {
                out += std::to_string(s);
                out += ',';
                out += htree::format_double(table.prob[s]);
                out += '\n';
            }
            write_output(oracle_out, out);
        }
    } catch (const std::exception& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
