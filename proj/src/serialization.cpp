#include "htree/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace htree {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

// Aligns per-edge values with the normalized, sorted edge order that
// TreeTopology::from_edges produces.
std::vector<double> align_edge_values(const TreeTopology& topology,
                                      std::vector<std::pair<std::pair<int, int>, double>> entries) {
    for (auto& e : entries)
        if (e.first.first > e.first.second) std::swap(e.first.first, e.first.second);
    std::sort(entries.begin(), entries.end());
    std::vector<double> values(entries.size());
    for (size_t e = 0; e < entries.size(); ++e) {
        if (entries[e].first != topology.edges[e])
            throw std::invalid_argument("edge list does not match the topology");
        values[e] = entries[e].second;
    }
    return values;
}

ordered_json parse_object(const std::string& text) {
    ordered_json j = ordered_json::parse(text); // throws nlohmann parse_error
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    return j;
}

int read_p(const ordered_json& j) {
    if (!j.contains("p") || !j["p"].is_number_integer())
        throw std::invalid_argument("field 'p' must be an integer");
    return j["p"].get<int>();
}

// Reads "edges" as arrays of width entries: [i, j] or [i, j, value].
void read_edges(const ordered_json& j, size_t width,
                std::vector<std::pair<int, int>>& pairs, std::vector<double>& values) {
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("field 'edges' must be an array");
    for (const auto& entry : j["edges"]) {
        if (!entry.is_array() || entry.size() != width)
            throw std::invalid_argument("each edge entry must be an array of the expected width");
        if (!entry[0].is_number_integer() || !entry[1].is_number_integer())
            throw std::invalid_argument("edge endpoints must be integers");
        pairs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
        if (width == 3) {
            if (!entry[2].is_number())
                throw std::invalid_argument("edge value must be a number");
            values.push_back(entry[2].get<double>());
        }
    }
}

} // namespace

std::string model_to_json(const IsingTreeModel& model) {
    ordered_json j;
    j["p"] = model.topology.vertex_count;
    j["edges"] = ordered_json::array();
    for (size_t e = 0; e < model.topology.edges.size(); ++e) {
        auto [a, b] = model.topology.edges[e];
        j["edges"].push_back({a, b, model.theta[e]});
    }
    return j.dump(2) + "\n";
}

IsingTreeModel model_from_json(const std::string& text) {
    ordered_json j = parse_object(text);
    int p = read_p(j);
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> theta;
    read_edges(j, 3, pairs, theta);
    TreeTopology topo = TreeTopology::from_edges(p, pairs);
    std::vector<std::pair<std::pair<int, int>, double>> entries(pairs.size());
    for (size_t e = 0; e < pairs.size(); ++e) entries[e] = {pairs[e], theta[e]};
    return IsingTreeModel::create(topo, align_edge_values(topo, std::move(entries)));
}

std::string topology_to_json(const TreeTopology& topology) {
    ordered_json j;
    j["p"] = topology.vertex_count;
    j["edges"] = ordered_json::array();
    for (auto [a, b] : topology.edges) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

TreeTopology topology_from_json(const std::string& text) {
    ordered_json j = parse_object(text);
    int p = read_p(j);
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> unused;
    read_edges(j, 2, pairs, unused);
    return TreeTopology::from_edges(p, pairs);
}

std::string fitted_to_json(const FittedTreeDistribution& dist) {
    ordered_json j;
    j["p"] = dist.topology.vertex_count;
    j["edges"] = ordered_json::array();
    for (size_t e = 0; e < dist.topology.edges.size(); ++e) {
        auto [a, b] = dist.topology.edges[e];
        j["edges"].push_back({a, b, dist.edge_mu[e]});
    }
    j["q"] = dist.q_used;
    return j.dump(2) + "\n";
}

FittedTreeDistribution fitted_from_json(const std::string& text) {
    ordered_json j = parse_object(text);
    int p = read_p(j);
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> mu;
    read_edges(j, 3, pairs, mu);
    if (!j.contains("q") || !j["q"].is_number())
        throw std::invalid_argument("field 'q' must be a number");
    FittedTreeDistribution d;
    d.topology = TreeTopology::from_edges(p, pairs);
    std::vector<std::pair<std::pair<int, int>, double>> entries(pairs.size());
    for (size_t e = 0; e < pairs.size(); ++e) entries[e] = {pairs[e], mu[e]};
    d.edge_mu = align_edge_values(d.topology, std::move(entries));
    for (double m : d.edge_mu)
        if (!(m >= -1.0 && m <= 1.0))
            throw std::invalid_argument("edge correlations must lie in [-1, 1]");
    d.q_used = j["q"].get<double>();
    if (!(d.q_used >= 0.0 && d.q_used < 0.5))
        throw std::invalid_argument("field 'q' must lie in [0, 0.5)");
    return d;
}

std::string batch_to_csv(const SampleBatch& batch) {
    std::string out;
    out.reserve(batch.data.size() * 3 + 128);
    out += "# p=" + std::to_string(batch.vertex_count);
    out += " n=" + std::to_string(batch.draws);
    out += " kind=";
    out += (batch.kind == SampleKind::hidden) ? "hidden" : "noisy";
    out += " q=" + format_double(batch.q_used);
    out += " seed=" + std::to_string(batch.seed);
    out += "\n";
    for (int64_t d = 0; d < batch.draws; ++d) {
        const int8_t* row = batch.data.data() + static_cast<size_t>(d) * batch.vertex_count;
        for (int v = 0; v < batch.vertex_count; ++v) {
            if (v) out += ',';
            out += (row[v] > 0) ? "1" : "-1";
        }
        out += '\n';
    }
    return out;
}

SampleBatch batch_from_csv(const std::string& text) {
    SampleBatch batch;
    size_t pos = text.find('\n');
    if (pos == std::string::npos) throw std::invalid_argument("missing sample header line");
    {
        std::string header = text.substr(0, pos);
        char kind[16] = {0};
        long long n = 0;
        unsigned long long seed = 0;
        int p = 0;
        double q = 0.0;
        if (std::sscanf(header.c_str(), "# p=%d n=%lld kind=%15s q=%lf seed=%llu",
                        &p, &n, kind, &q, &seed) != 5)
            throw std::invalid_argument("malformed sample header line");
        batch.vertex_count = p;
        batch.draws = n;
        batch.q_used = q;
        batch.seed = seed;
        std::string k(kind);
        if (k == "hidden") batch.kind = SampleKind::hidden;
        else if (k == "noisy") batch.kind = SampleKind::noisy;
        else throw std::invalid_argument("sample kind must be hidden or noisy");
    }
    if (batch.vertex_count < 1 || batch.draws < 1)
        throw std::invalid_argument("sample header dimensions must be positive");
    batch.data.reserve(static_cast<size_t>(batch.draws) * batch.vertex_count);
    size_t i = pos + 1;
    while (i < text.size()) {
        size_t end = text.find('\n', i);
        if (end == std::string::npos) end = text.size();
        int cols = 0;
        size_t j = i;
        while (j < end) {
            size_t comma = text.find(',', j);
            if (comma == std::string::npos || comma > end) comma = end;
            std::string tok = text.substr(j, comma - j);
            if (tok == "1") batch.data.push_back(1);
            else if (tok == "-1") batch.data.push_back(-1);
            else throw std::invalid_argument("sample entries must be -1 or 1");
            ++cols;
            j = comma + 1;
        }
        if (cols != batch.vertex_count)
            throw std::invalid_argument("sample row width does not match header");
        i = end + 1;
    }
    if (batch.data.size() != static_cast<size_t>(batch.draws) * batch.vertex_count)
        throw std::invalid_argument("sample row count does not match header");
    return batch;
}

} // namespace htree
