#pragma once

#include <optional>
#include <vector>

#include "vne/model.hpp"
#include "vne/pathing.hpp"
#include "vne/rng.hpp"

namespace vne {

// Real-number-encoded chromosome: position j holds the substrate node id
// hosting virtual node j. Genes are pairwise distinct and each host has enough
// residual cpu for its virtual node.
struct Individual {
    std::vector<int> genes;
    double fitness = 0.0;
};

struct PopulationStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;

    static PopulationStats of(const std::vector<Individual>& pop);
};

// Fitness estimate of an individual whose virtual links have no feasible
// estimated path. Strictly dominates any feasible cost on realistic instances
// while keeping the arithmetic finite so repair and evolution can recover.
double infeasible_penalty(const VirtualNetworkRequest& vnr, const SubstrateNetwork& net);

// Embedding price estimate: cpu demand times host unit price per virtual node
// plus bandwidth demand times the estimated cheapest path weight per virtual
// link. Any infeasible matrix entry turns the whole estimate into the penalty.
double mapping_fitness(const std::vector<int>& genes, const VirtualNetworkRequest& vnr,
                       const DistanceMatrix& dm, const SubstrateNetwork& net, double penalty);

// Uniformly random feasible chromosome, or nullopt when the bounded number of
// attempts is exhausted (e.g. fewer cpu-sufficient nodes than virtual nodes).
std::optional<std::vector<int>> random_feasible_genes(const VirtualNetworkRequest& vnr,
                                                      const SubstrateNetwork& net, Rng& rng,
                                                      int max_attempts = 50);

// Re-draws duplicate or cpu-violating genes from the feasible unused nodes.
// Returns false when some position has no legal replacement.
bool repair_genes(std::vector<int>& genes, const VirtualNetworkRequest& vnr,
                  const SubstrateNetwork& net, Rng& rng);

// Repair, falling back to a fresh random chromosome when repair is impossible;
// nullopt signals that no feasible individual exists at all.
std::optional<Individual> feasibility_repair(const Individual& ind,
                                             const VirtualNetworkRequest& vnr,
                                             const SubstrateNetwork& net, Rng& rng);

// Exchanges a random number of allele pairs (1 to ceil(n/2) positions) between
// two parents, in place.
void exchange_crossover(std::vector<int>& child1, std::vector<int>& child2, Rng& rng);

bool genes_feasible(const std::vector<int>& genes, const VirtualNetworkRequest& vnr,
                    const SubstrateNetwork& net);

}  // namespace vne
