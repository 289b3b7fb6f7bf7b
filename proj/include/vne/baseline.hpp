#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vne/ga_common.hpp"
#include "vne/model.hpp"

namespace vne {

struct TgaParams {
    int population = 50;
    int max_iterations = 50;
    double crossover_prob = 0.7;
    double mutation_prob = 0.03;
};

// Traditional genetic algorithm baseline: same chromosome encoding and fitness
// as the hybrid, but fixed crossover probability, fitness-proportionate
// (inverse) roulette parent selection, uniformly random mutation genes, pure
// generational replacement, and no pheromones or cataclysm. Link cost
// estimates use plain unit-price weights with no residual constraints.
std::optional<std::vector<Individual>> tga_run(const VirtualNetworkRequest& vnr,
                                               const SubstrateNetwork& net,
                                               const TgaParams& params, std::uint64_t seed);

}  // namespace vne
