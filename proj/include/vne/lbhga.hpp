#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vne/ga_common.hpp"
#include "vne/model.hpp"
#include "vne/pathing.hpp"
#include "vne/rng.hpp"

namespace vne {

struct LbhgaParams {
    int population = 40;
    int max_iterations = 50;
    double mutation_prob = 0.2;
    double lambda1 = 1.2;         // crossover intervention, both-above-mean case
    double lambda2 = 0.8;         // crossover intervention, both-below-mean case
    double lambda_weights = 1.0;  // load-balancing intervention for the weight view
    double rho = 0.1;             // pheromone dissipation factor
    int mutation_gene_count = 1;  // genes re-drawn per mutation event
};

// Per-substrate-node pheromone quantities. Values are clamped at a small
// positive floor so the roulette share is always well defined.
class PheromoneTable {
public:
    explicit PheromoneTable(double rho, double floor = 1e-6) : rho_(rho), floor_(floor) {}

    double get(int node_id) const {
        auto it = tau_.find(node_id);
        return it == tau_.end() ? floor_ : it->second;
    }
    void add(int node_id, double delta) {
        double& v = tau_.try_emplace(node_id, floor_).first->second;
        v = std::max(floor_, v + delta);
    }
    void dissipate() {
        for (auto& [id, v] : tau_) v = std::max(floor_, v * (1.0 - rho_));
    }
    double rho() const { return rho_; }
    double floor_value() const { return floor_; }
    std::size_t size() const { return tau_.size(); }

private:
    std::unordered_map<int, double> tau_;
    double rho_;
    double floor_;
};

// Fitness-dependent crossover probability. Three cases against the population
// mean: both parents at or above it, both at or below it, or straddling it;
// a degenerate uniform population yields 0.5. Result is clamped to [0,1].
double crossover_probability(double f1, double f2, const PopulationStats& stats,
                             double lambda1, double lambda2);

// Every individual deposits (population max fitness - own fitness) / gene
// count on each of its substrate nodes; deposits on shared nodes add up.
void init_pheromones(const std::vector<Individual>& pop, PheromoneTable& table);

// Scales every stored quantity by (1 - rho), then lets the new offspring
// deposit against the offspring population's max fitness.
void crossover_pheromone_update(const std::vector<Individual>& offspring,
                                PheromoneTable& table);

// Roulette selection without replacement where a gene's weight is the
// complement of its pheromone share, so low-pheromone genes mutate more.
std::vector<int> select_mutation_genes(const Individual& ind, const PheromoneTable& table,
                                       int count, Rng& rng);

// Reassigns each selected gene to a random feasible unused substrate node
// (genes with no legal replacement stay put), recomputes fitness, and shifts
// pheromone between the pre- and post-mutation nodes by
// |fitness delta| / |gene set|, toward the nodes of the better variant.
void mutate(Individual& ind, const std::vector<int>& gene_set,
            const VirtualNetworkRequest& vnr, const SubstrateNetwork& net,
            const DistanceMatrix& dm, double penalty, PheromoneTable& table, Rng& rng);

// Observer invoked after every iteration with (iteration, best fitness seen so
// far, population size); used by diagnostics and tests.
using IterationObserver = std::function<void(int, double, int)>;

// Full node-mapping search: seeded population, elite survival of the best
// half, dynamic-probability crossover with feasibility repair, pheromone
// updates, pheromone-guided mutation, and a cataclysm restart after prolonged
// stagnation. Returns the final population sorted by ascending fitness, or
// nullopt when no feasible individual can be constructed.
std::optional<std::vector<Individual>> lbhga_run(const VirtualNetworkRequest& vnr,
                                                 const SubstrateNetwork& net,
                                                 const LbhgaParams& params,
                                                 std::uint64_t seed,
                                                 const IterationObserver& observer = {});

}  // namespace vne
