#include "vne/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vne {

namespace {

using nlohmann::json;

[[noreturn]] void missing(const std::string& key) {
    throw ConfigError("missing required key '" + key + "'");
}

[[noreturn]] void bad_type(const std::string& key, const char* expected) {
    throw ConfigError("key '" + key + "' must be " + expected);
}

const json& require(const json& obj, const std::string& scope, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) missing(scope.empty() ? key : scope + "." + key);
    return *it;
}

int get_int(const json& obj, const std::string& scope, const std::string& key) {
    const json& v = require(obj, scope, key);
    if (!v.is_number_integer()) bad_type(scope + "." + key, "an integer");
    return v.get<int>();
}

double get_num(const json& obj, const std::string& scope, const std::string& key) {
    const json& v = require(obj, scope, key);
    if (!v.is_number()) bad_type(scope + "." + key, "a number");
    return v.get<double>();
}

std::pair<int, int> get_range(const json& obj, const std::string& scope,
                              const std::string& key) {
    const json& v = require(obj, scope, key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer())
        bad_type(scope + "." + key, "a two-element integer array");
    return {v[0].get<int>(), v[1].get<int>()};
}

void reject_unknown(const json& obj, const std::string& scope,
                    const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            throw ConfigError("unknown key '" + (scope.empty() ? it.key() : scope + "." + it.key()) + "'");
    }
}

int opt_int(const json& obj, const std::string& scope, const std::string& key, int dflt) {
    auto it = obj.find(key);
    if (it == obj.end()) return dflt;
    if (!it->is_number_integer()) bad_type(scope + "." + key, "an integer");
    return it->get<int>();
}

double opt_num(const json& obj, const std::string& scope, const std::string& key,
               double dflt) {
    auto it = obj.find(key);
    if (it == obj.end()) return dflt;
    if (!it->is_number()) bad_type(scope + "." + key, "a number");
    return it->get<double>();
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(root, "", {"substrate", "stream", "algorithm", "experiment"});

    ExperimentConfig cfg;

    if (!root.contains("substrate")) missing("substrate");
    const json& sub = root["substrate"];
    reject_unknown(sub, "substrate",
                   {"domain_count", "nodes_per_domain", "intra_edge_prob",
                    "inter_links_per_domain_pair", "cpu_range", "intra_bw_range",
                    "inter_bw_range", "price_range"});
    cfg.substrate.domain_count = get_int(sub, "substrate", "domain_count");
    cfg.substrate.nodes_per_domain = get_int(sub, "substrate", "nodes_per_domain");
    cfg.substrate.intra_edge_prob = get_num(sub, "substrate", "intra_edge_prob");
    cfg.substrate.inter_links_per_domain_pair =
        get_int(sub, "substrate", "inter_links_per_domain_pair");
    cfg.substrate.cpu_range = get_range(sub, "substrate", "cpu_range");
    cfg.substrate.intra_bw_range = get_range(sub, "substrate", "intra_bw_range");
    cfg.substrate.inter_bw_range = get_range(sub, "substrate", "inter_bw_range");
    cfg.substrate.price_range = get_range(sub, "substrate", "price_range");

    if (!root.contains("stream")) missing("stream");
    const json& st = root["stream"];
    reject_unknown(st, "stream",
                   {"mean_arrivals_per_100_units", "vnr_node_range", "cpu_demand_range",
                    "bw_demand_range", "lifetime", "horizon"});
    cfg.stream.mean_arrivals_per_100_units =
        get_num(st, "stream", "mean_arrivals_per_100_units");
    cfg.stream.vnr_node_range = get_range(st, "stream", "vnr_node_range");
    cfg.stream.cpu_demand_range = get_range(st, "stream", "cpu_demand_range");
    cfg.stream.bw_demand_range = get_range(st, "stream", "bw_demand_range");
    cfg.stream.lifetime = get_num(st, "stream", "lifetime");
    cfg.stream.horizon = get_num(st, "stream", "horizon");

    if (root.contains("algorithm")) {
        const json& alg = root["algorithm"];
        reject_unknown(alg, "algorithm", {"lbhga", "tga"});
        if (alg.contains("lbhga")) {
            const json& a = alg["lbhga"];
            const std::string scope = "algorithm.lbhga";
            reject_unknown(a, scope,
                           {"population", "iterations", "lambda1", "lambda2", "lambda",
                            "mutation_prob", "rho", "mutation_gene_count", "retry_limit"});
            cfg.lbhga.population = opt_int(a, scope, "population", cfg.lbhga.population);
            cfg.lbhga.max_iterations = opt_int(a, scope, "iterations", cfg.lbhga.max_iterations);
            cfg.lbhga.lambda1 = opt_num(a, scope, "lambda1", cfg.lbhga.lambda1);
            cfg.lbhga.lambda2 = opt_num(a, scope, "lambda2", cfg.lbhga.lambda2);
            cfg.lbhga.lambda_weights = opt_num(a, scope, "lambda", cfg.lbhga.lambda_weights);
            cfg.lbhga.mutation_prob = opt_num(a, scope, "mutation_prob", cfg.lbhga.mutation_prob);
            cfg.lbhga.rho = opt_num(a, scope, "rho", cfg.lbhga.rho);
            cfg.lbhga.mutation_gene_count =
                opt_int(a, scope, "mutation_gene_count", cfg.lbhga.mutation_gene_count);
            cfg.lbhga_retry_limit = opt_int(a, scope, "retry_limit", cfg.lbhga_retry_limit);
        }
        if (alg.contains("tga")) {
            const json& a = alg["tga"];
            const std::string scope = "algorithm.tga";
            reject_unknown(a, scope,
                           {"population", "iterations", "crossover_prob", "mutation_prob",
                            "retry_limit"});
            cfg.tga.population = opt_int(a, scope, "population", cfg.tga.population);
            cfg.tga.max_iterations = opt_int(a, scope, "iterations", cfg.tga.max_iterations);
            cfg.tga.crossover_prob = opt_num(a, scope, "crossover_prob", cfg.tga.crossover_prob);
            cfg.tga.mutation_prob = opt_num(a, scope, "mutation_prob", cfg.tga.mutation_prob);
            cfg.tga_retry_limit = opt_int(a, scope, "retry_limit", cfg.tga_retry_limit);
        }
    }

    if (!root.contains("experiment")) missing("experiment");
    const json& exp = root["experiment"];
    reject_unknown(exp, "experiment", {"seeds", "algorithms", "out_dir"});
    const json& seeds = require(exp, "experiment", "seeds");
    if (!seeds.is_array() || seeds.empty()) bad_type("experiment.seeds", "a non-empty array");
    for (const auto& s : seeds) {
        if (!s.is_number_integer() || s.get<long long>() < 0)
            bad_type("experiment.seeds", "an array of non-negative integers");
        cfg.seeds.push_back(s.get<std::uint64_t>());
    }
    const json& algs = require(exp, "experiment", "algorithms");
    if (!algs.is_array() || algs.empty())
        bad_type("experiment.algorithms", "a non-empty array");
    for (const auto& a : algs) {
        if (!a.is_string()) bad_type("experiment.algorithms", "an array of strings");
        try {
            cfg.algorithms.push_back(algorithm_from_name(a.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("experiment.algorithms: ") + e.what());
        }
    }
    if (exp.contains("out_dir")) {
        if (!exp["out_dir"].is_string()) bad_type("experiment.out_dir", "a string");
        cfg.out_dir = exp["out_dir"].get<std::string>();
    }

    try {
        cfg.substrate.validate();
        cfg.stream.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace vne
