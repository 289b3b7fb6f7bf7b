// Acceptance suite: checks the project's verification criteria end to end and
// prints one pass/fail line per criterion. Exit status is the failure count.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "builders.hpp"
#include "oracles.hpp"
#include "stats.hpp"
#include "vne/baseline.hpp"
#include "vne/config.hpp"
#include "vne/experiment.hpp"
#include "vne/lbhga.hpp"
#include "vne/linkmap.hpp"
#include "vne/model.hpp"
#include "vne/pathing.hpp"
#include "vne/sim.hpp"
#include "vne/topology.hpp"

using namespace vne;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

bool nearly(double a, double b, double rel = 1e-9) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            detail = std::string("failed: ") + #cond;                 \
            return false;                                             \
        }                                                             \
    } while (0)

// ---------------------------------------------------------------- criterion 1
bool formula_unit_suite(std::string& detail) {
    // objective: node price plus demand times aggregate path price
    {
        SubstrateNetwork net;
        net.add_node(0, 100, 3);
        net.add_node(0, 100, 1);
        net.add_node(0, 100, 1);
        net.add_link(0, 1, 100, 1, false);
        net.add_link(1, 2, 100, 5, false);
        auto vnr = fixture::simple_vnr(1, {2, 0}, {{0, 1, 4}});
        auto plan = fixture::plan_for(vnr, {0, 2}, {{0, 1}});
        EXPECT(objective_value(net, plan) == 30);
    }
    // fitness estimate against a distance matrix entry
    {
        SubstrateNetwork net;
        net.add_node(0, 100, 3);
        net.add_node(0, 100, 1);
        net.add_link(0, 1, 100, 6, false);
        auto vnr = fixture::simple_vnr(1, {2, 3}, {{0, 1, 4}});
        auto dm = all_pairs_estimate(net, static_price_weights(net));
        EXPECT(nearly(mapping_fitness({0, 1}, vnr, dm, net, 1e9), 33.0));
    }
    // load variance of consumptions {0, 10}
    {
        auto net = fixture::line_network(3, 10, 50);
        net.consume_bandwidth(1, 10);
        EXPECT(nearly(link_load_variance(net), 25.0));
    }
    // revenue and cost with a two-hop path
    {
        auto net = fixture::line_network(3, 50, 50);
        auto vnr = fixture::simple_vnr(1, {2, 3}, {{0, 1, 4}});
        auto plan =
            fixture::plan_for(vnr, {0, 2}, {{net.find_link(0, 1), net.find_link(1, 2)}});
        EXPECT(revenue_of(vnr) == 9);
        EXPECT(cost_of(plan) == 13);
    }
    // crossover probability, all three cases
    {
        std::vector<Individual> pop;
        for (double f : {10.0, 20.0, 30.0, 40.0}) pop.push_back({{}, f});
        const auto stats = PopulationStats::of(pop);
        EXPECT(nearly(crossover_probability(30, 40, stats, 1.2, 0.8), 0.4));
        EXPECT(crossover_probability(25, 25, stats, 1.2, 0.8) == 0.0);
        EXPECT(nearly(crossover_probability(10, 20, stats, 1.2, 0.8),
                      0.8 * (1.0 - 5.0 / 15.0)));
        EXPECT(nearly(crossover_probability(10, 40, stats, 1.2, 0.8), 0.0));
    }
    // congestion weight of the busiest link
    {
        SubstrateNetwork net;
        for (int i = 0; i < 4; ++i) net.add_node(0, 10, 1);
        net.add_link(0, 1, 1000, 2, false);
        net.add_link(1, 2, 1000, 2, false);
        net.add_link(2, 3, 1000, 5, false);
        net.consume_bandwidth(0, 10);
        net.consume_bandwidth(1, 20);
        net.consume_bandwidth(2, 30);
        auto view = load_balanced_weights(net, 1.0, 0);
        EXPECT(nearly(view.weight[2], 10.0));
        EXPECT(nearly(view.weight[0], 2.0));
    }
    // pheromone seeding, dissipation and mutation updates
    {
        PheromoneTable table(0.1);
        std::vector<Individual> pop{{{0, 1, 2, 3, 4}, 10.0}, {{4, 5, 6, 7, 8}, 30.0}};
        init_pheromones(pop, table);
        EXPECT(nearly(table.get(0), 4.0));
        EXPECT(nearly(table.get(4), 4.0));
        EXPECT(nearly(table.get(8), table.floor_value()));

        PheromoneTable decay(0.1);
        decay.add(9, 10.0 - decay.floor_value());
        crossover_pheromone_update({}, decay);
        EXPECT(nearly(decay.get(9), 9.0));
        crossover_pheromone_update({}, decay);
        EXPECT(nearly(decay.get(9), 8.1));
    }
    {
        // forced two-gene move from the price-4 hosts to the price-3 hosts:
        // fitness 40 -> 30 with two genes mutated, so the shift is 5 per node
        SubstrateNetwork net;
        net.add_node(0, 4, 4);
        net.add_node(0, 6, 4);
        net.add_node(0, 6, 3);
        net.add_node(0, 6, 3);
        net.add_link(0, 1, 10, 1, false);
        net.add_link(1, 2, 10, 1, false);
        net.add_link(2, 3, 10, 1, false);
        auto vnr = fixture::simple_vnr(1, {4, 6});
        auto dm = all_pairs_estimate(net, static_price_weights(net));
        const double penalty = infeasible_penalty(vnr, net);

        PheromoneTable table(0.1);
        table.add(0, 20.0);
        table.add(1, 20.0);
        Individual ind{{0, 1}, 40.0};
        Rng rng(5);
        mutate(ind, {0, 1}, vnr, net, dm, penalty, table, rng);
        EXPECT(nearly(ind.fitness, 30.0));
        EXPECT(nearly(table.get(0), 20.0 + table.floor_value() - 5.0));
        EXPECT(nearly(table.get(1), 20.0 + table.floor_value() - 5.0));
        EXPECT(nearly(table.get(2), table.floor_value() + 5.0));
        EXPECT(nearly(table.get(3), table.floor_value() + 5.0));
    }
    // demands sharing a substrate link add up
    {
        auto net = fixture::line_network(2, 100, 10);
        auto vnr = fixture::simple_vnr(1, {1, 1}, {{0, 1, 2}, {0, 1, 3}});
        const int l01 = net.find_link(0, 1);
        auto plan = fixture::plan_for(vnr, {0, 1}, {{l01}, {l01}});
        allocate(net, plan);
        EXPECT(net.link(l01).bw_used == 5);
    }
    detail = "all worked examples match";
    return true;
}

// ---------------------------------------------------------------- criterion 2
bool dijkstra_oracle(std::string& detail) {
    Rng rng(404);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        SubstrateConfig cfg;
        cfg.domain_count = 2;
        cfg.nodes_per_domain = 10;
        cfg.intra_edge_prob = 0.3;
        cfg.inter_links_per_domain_pair = 2;
        auto net = generate_substrate(cfg, static_cast<std::uint64_t>(trial));

        WeightView view;
        for (int i = 0; i < net.link_count(); ++i) {
            view.weight.push_back(rng.uniform_int(1, 25));
            view.excluded.push_back(rng.bernoulli(0.2) ? 1 : 0);
        }
        for (int pair = 0; pair < 12; ++pair) {
            const int src = rng.uniform_int(0, net.node_count() - 1);
            const int dst = rng.uniform_int(0, net.node_count() - 1);
            if (src == dst) continue;
            auto path = shortest_path(net, view, src, dst);
            const double expected = oracle::bellman_ford_cost(net, view, src, dst);
            if (!path) {
                EXPECT(std::isinf(expected));
            } else {
                EXPECT(path_weight(view, *path) == expected);
                for (int idx : *path)
                    EXPECT(view.excluded[static_cast<std::size_t>(idx)] == 0);
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " source/target pairs matched exactly";
    return true;
}

// ---------------------------------------------------------------- criterion 3
bool ga_quality_oracle(std::string& detail) {
    int optimum_hits = 0;
    const int instances = 50;
    for (int i = 0; i < instances; ++i) {
        SubstrateConfig cfg;
        cfg.domain_count = 1;
        cfg.nodes_per_domain = 8;
        cfg.inter_links_per_domain_pair = 0;
        cfg.cpu_range = {50, 100};
        auto net = generate_substrate(cfg, static_cast<std::uint64_t>(1000 + i));

        VnrStreamConfig scfg;
        scfg.vnr_node_range = {5, 5};
        scfg.horizon = 40.0;
        auto stream = generate_vnr_stream(scfg, static_cast<std::uint64_t>(1000 + i));
        if (stream.empty()) continue;
        const auto& vnr = stream.front();

        const auto view = load_balanced_weights(net, 1.0, vnr.min_bw_demand());
        const auto dm = all_pairs_estimate(net, view);
        const double penalty = infeasible_penalty(vnr, net);
        const double optimum = oracle::brute_force_best_fitness(vnr, net, dm, penalty);

        LbhgaParams params;  // 40 individuals, 50 iterations
        auto result = lbhga_run(vnr, net, params, static_cast<std::uint64_t>(9000 + i));
        EXPECT(result.has_value());
        const double got = result->front().fitness;
        EXPECT(got <= 1.25 * optimum + 1e-9);
        if (nearly(got, optimum)) ++optimum_hits;
    }
    detail = std::to_string(optimum_hits) + "/" + std::to_string(instances) +
             " instances hit the enumerated optimum";
    return optimum_hits * 5 >= instances * 4;  // at least 80%
}

// ---------------------------------------------------------------- criterion 4
bool conservation_property(std::string& detail) {
    Rng rng(515);
    long long alloc_attempts = 0;
    for (int sequence = 0; sequence < 10000; ++sequence) {
        SubstrateNetwork net;
        const int n = 8;
        for (int i = 0; i < n; ++i) net.add_node(0, 20, 1 + i % 3);
        for (int i = 0; i + 1 < n; ++i) net.add_link(i, i + 1, 15, 1, false);
        net.add_link(0, n - 1, 15, 2, false);
        const auto initial = oracle::NetworkSnapshot::of(net);

        std::vector<int> active;
        const int ops = rng.uniform_int(2, 6);
        for (int id = 0; id < ops; ++id) {
            auto vnr = fixture::simple_vnr(id, {rng.uniform_int(1, 12), rng.uniform_int(1, 12)},
                                           {{0, 1, rng.uniform_int(1, 12)}});
            const int a = rng.uniform_int(0, n - 2);
            auto plan = fixture::plan_for(vnr, {a, a + 1}, {{net.find_link(a, a + 1)}});
            const auto before = oracle::NetworkSnapshot::of(net);
            ++alloc_attempts;
            try {
                allocate(net, plan);
                active.push_back(id);
            } catch (const ModelError&) {
                EXPECT(oracle::NetworkSnapshot::of(net) == before);  // atomicity
            }
            EXPECT(ledger_consistent(net));  // capacity never exceeded mid-flight
        }
        rng.shuffle(active);
        for (int id : active) {
            release(net, id);
            EXPECT(ledger_consistent(net));
        }
        EXPECT(oracle::NetworkSnapshot::of(net) == initial);
    }
    detail = "10000 sequences (" + std::to_string(alloc_attempts) +
             " allocations) restored the initial state";
    return true;
}

// ---------------------------------------------------------------- criterion 5
bool crossover_probability_property(std::string& detail) {
    Rng rng(616);
    for (int sample = 0; sample < 1000000; ++sample) {
        const int n = rng.uniform_int(2, 10);
        std::vector<Individual> pop;
        for (int i = 0; i < n; ++i)
            pop.push_back({{}, static_cast<double>(rng.uniform_int(1, 400))});
        const auto stats = PopulationStats::of(pop);
        const double f1 = pop[rng.index(pop.size())].fitness;
        const double f2 = pop[rng.index(pop.size())].fitness;
        const double l1 = rng.uniform01() * 2.0 + 1e-12;
        const double l2 = rng.uniform01() * 2.0 + 1e-12;
        const double p = crossover_probability(f1, f2, stats, l1, l2);
        EXPECT(p >= 0.0);
        EXPECT(p <= 1.0);
    }
    // exact boundary values in the first case
    std::vector<Individual> pop;
    for (double f : {10.0, 20.0, 30.0, 40.0}) pop.push_back({{}, f});
    const auto stats = PopulationStats::of(pop);
    EXPECT(crossover_probability(25.0, 25.0, stats, 1.2, 0.8) == 0.0);
    EXPECT(crossover_probability(40.0, 40.0, stats, 1.2, 0.8) == 1.0);
    EXPECT(crossover_probability(40.0, 40.0, stats, 0.75, 0.8) == 0.75);
    detail = "1e6 samples stayed in [0,1]; boundaries exact";
    return true;
}

// ---------------------------------------------------------------- criterion 6
bool mutation_selection_distribution(std::string& detail) {
    PheromoneTable table(0.1);
    table.add(100, 9.0 - table.floor_value());
    table.add(200, 1.0 - table.floor_value());
    Individual ind{{100, 200}, 0.0};
    Rng rng(717);
    int low_picks = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        auto picked = select_mutation_genes(ind, table, 1, rng);
        if (picked[0] == 1) ++low_picks;
    }
    const double share = low_picks / 10000.0;
    EXPECT(share >= 0.88);
    EXPECT(share <= 0.92);

    PheromoneTable even(0.1);
    Individual five{{1, 2, 3, 4, 5}, 0.0};
    for (int g : five.genes) even.add(g, 2.5);
    std::vector<long long> counts(5, 0);
    for (int trial = 0; trial < 10000; ++trial)
        ++counts[static_cast<std::size_t>(select_mutation_genes(five, even, 1, rng)[0])];
    const double chi2 = teststat::chi_squared_uniform(counts);
    EXPECT(chi2 < teststat::chi_squared_critical_001(4));
    char buf[128];
    std::snprintf(buf, sizeof(buf), "low-pheromone share %.4f, uniform chi2 %.2f", share,
                  chi2);
    detail = buf;
    return true;
}

// ---------------------------------------------------------------- criterion 7
ExperimentConfig scaled_comparison_config() {
    ExperimentConfig cfg;
    cfg.substrate.domain_count = 4;
    cfg.substrate.nodes_per_domain = 10;
    cfg.substrate.intra_edge_prob = 0.5;
    cfg.substrate.inter_links_per_domain_pair = 3;
    cfg.substrate.cpu_range = {100, 300};
    // bandwidth scaled with the topology so the stream creates real contention
    cfg.substrate.intra_bw_range = {100, 300};
    cfg.substrate.inter_bw_range = {300, 600};
    cfg.substrate.price_range = {1, 10};
    cfg.stream.mean_arrivals_per_100_units = 10.0;
    cfg.stream.vnr_node_range = {5, 10};
    cfg.stream.cpu_demand_range = {1, 10};
    cfg.stream.bw_demand_range = {1, 10};
    cfg.stream.lifetime = 300.0;
    cfg.stream.horizon = 600.0;
    return cfg;
}

bool comparative_run(std::string& detail) {
    const auto cfg = scaled_comparison_config();
    int var_wins = 0, var_losses = 0;
    int acc_wins = 0, acc_losses = 0;
    int rc_wins = 0, rc_losses = 0;

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SimParams lb;
        lb.algorithm = Algorithm::lbhga;
        SimParams tg;
        tg.algorithm = Algorithm::tga;
        auto lb_result = run_simulation(cfg.substrate, cfg.stream, lb, seed);
        auto tg_result = run_simulation(cfg.substrate, cfg.stream, tg, seed);

        auto mean_variance = [](const SimulationResult& r) {
            double total = 0.0;
            for (const auto& rec : r.records) total += rec.link_load_variance;
            return total / static_cast<double>(r.records.size());
        };
        const double lb_var = mean_variance(lb_result);
        const double tg_var = mean_variance(tg_result);
        if (lb_var < tg_var) ++var_wins;
        else if (lb_var > tg_var) ++var_losses;

        const double lb_acc = lb_result.records.back().acceptance_ratio;
        const double tg_acc = tg_result.records.back().acceptance_ratio;
        if (lb_acc > tg_acc) ++acc_wins;
        else if (lb_acc < tg_acc) ++acc_losses;

        const double lb_rc = lb_result.records.back().revenue_cost_ratio;
        const double tg_rc = tg_result.records.back().revenue_cost_ratio;
        if (lb_rc > tg_rc) ++rc_wins;
        else if (lb_rc < tg_rc) ++rc_losses;
    }

    const double p_var = teststat::sign_test_p_value(var_wins, var_wins + var_losses);
    const double p_acc = teststat::sign_test_p_value(acc_wins, acc_wins + acc_losses);
    const double p_rc = teststat::sign_test_p_value(rc_wins, rc_wins + rc_losses);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "variance %d-%d (p=%.4f), acceptance %d-%d (p=%.4f), R/C %d-%d (p=%.4f)",
                  var_wins, var_losses, p_var, acc_wins, acc_losses, p_acc, rc_wins,
                  rc_losses, p_rc);
    detail = buf;
    return p_var < 0.05 && p_acc < 0.05 && p_rc < 0.05;
}

// ---------------------------------------------------------------- criterion 8
bool determinism(std::string& detail) {
    namespace fs = std::filesystem;
    auto cfg = scaled_comparison_config();
    cfg.stream.horizon = 300.0;
    cfg.seeds = {3, 4};
    cfg.algorithms = {Algorithm::lbhga, Algorithm::tga};

    auto strip_runtime_columns = [](const std::string& csv) {
        std::istringstream in(csv);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line)) {
            std::size_t cut = line.size();
            for (int drop = 0; drop < 2; ++drop) cut = line.rfind(',', cut - 1);
            out << line.substr(0, cut) << '\n';
        }
        return out.str();
    };
    auto read_file = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    const fs::path base =
        fs::temp_directory_path() / ("vnesim_acceptance_" + std::to_string(::getpid()));
    std::ostringstream sink;
    cfg.out_dir = (base / "a").string();
    auto first = run_experiment(cfg, sink);
    cfg.out_dir = (base / "b").string();
    auto second = run_experiment(cfg, sink);

    bool ok = first.runs.size() == second.runs.size();
    for (std::size_t i = 0; ok && i < first.runs.size(); ++i) {
        ok = strip_runtime_columns(read_file(first.runs[i].csv_path)) ==
             strip_runtime_columns(read_file(second.runs[i].csv_path));
    }
    std::error_code ec;
    fs::remove_all(base, ec);
    EXPECT(ok);
    detail = std::to_string(first.runs.size()) + " run pairs byte-identical";
    return true;
}

// ---------------------------------------------------------------- criterion 9
bool corridor_bypass(std::string& detail) {
    fixture::CorridorNetwork cn;
    auto view0 = load_balanced_weights(cn.net, 0.8, 0);
    auto before = shortest_path(cn.net, view0, cn.e, cn.c);
    EXPECT(before.has_value());
    EXPECT(*before == cn.cheap_route());

    auto vnr = fixture::simple_vnr(9, {1, 1}, {{0, 1, 60}});
    auto plan = fixture::plan_for(vnr, {cn.e, cn.d}, {{cn.net.find_link(cn.e, cn.d)}});
    allocate(cn.net, plan);

    auto view1 = load_balanced_weights(cn.net, 0.8, 0);
    auto after = shortest_path(cn.net, view1, cn.e, cn.c);
    EXPECT(after.has_value());
    EXPECT(*after != *before);

    // the selected path avoids every link at the maximal load margin
    double mean = 0.0;
    int max_used = 0;
    for (const auto& l : cn.net.links()) {
        mean += l.bw_used;
        max_used = std::max(max_used, l.bw_used);
    }
    mean /= static_cast<double>(cn.net.link_count());
    for (int idx : *after) EXPECT(cn.net.link(idx).bw_used < max_used);
    EXPECT(static_cast<double>(max_used) > mean);
    detail = "path switched to the detour and avoided the overloaded corridor";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 formula unit suite", 1.0, formula_unit_suite},
        {"2 shortest-path oracle equivalence", 5.0, dijkstra_oracle},
        {"3 search quality vs exhaustive optimum", 60.0, ga_quality_oracle},
        {"4 conservation over random allocate/release", 10.0, conservation_property},
        {"5 crossover probability bounds", 10.0, crossover_probability_property},
        {"6 mutation selection distribution", 30.0, mutation_selection_distribution},
        {"7 comparative run lbhga vs tga", 600.0, comparative_run},
        {"8 determinism of experiment outputs", 120.0, determinism},
        {"9 congested corridor bypass", 5.0, corridor_bypass},
    };

    int failures = 0;
    for (auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > c.time_limit_s) {
            ok = false;
            detail += " [exceeded " + std::to_string(c.time_limit_s) + "s budget]";
        }
        std::printf("[%s] criterion %s (%.2fs) %s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                    elapsed, detail.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
