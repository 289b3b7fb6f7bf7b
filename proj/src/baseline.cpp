#include "vne/baseline.hpp"

#include <algorithm>

#include "vne/pathing.hpp"

namespace vne {

std::optional<std::vector<Individual>> tga_run(const VirtualNetworkRequest& vnr,
                                               const SubstrateNetwork& net,
                                               const TgaParams& params, std::uint64_t seed) {
    Rng rng(seed);
    const WeightView view = static_price_weights(net);
    const DistanceMatrix dm = all_pairs_estimate(net, view);
    const double penalty = infeasible_penalty(vnr, net);

    auto evaluate = [&](Individual& ind) {
        ind.fitness = mapping_fitness(ind.genes, vnr, dm, net, penalty);
    };

    const int x = params.population;
    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(x));
    for (int i = 0; i < x; ++i) {
        auto genes = random_feasible_genes(vnr, net, rng);
        if (!genes) return std::nullopt;
        Individual ind;
        ind.genes = std::move(*genes);
        evaluate(ind);
        pop.push_back(std::move(ind));
    }

    // minimizing, so parents are drawn proportionally to 1 / fitness
    auto roulette_pick = [&]() -> std::size_t {
        double total = 0.0;
        for (const auto& ind : pop) total += 1.0 / ind.fitness;
        double r = rng.uniform01() * total;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            r -= 1.0 / pop[i].fitness;
            if (r < 0.0) return i;
        }
        return pop.size() - 1;
    };

    auto mutate_random_gene = [&](Individual& ind) {
        const std::size_t gi = rng.index(ind.genes.size());
        std::vector<int> candidates;
        for (const auto& sn : net.nodes()) {
            if (sn.cpu_residual < vnr.nodes[gi].cpu_demand) continue;
            if (std::find(ind.genes.begin(), ind.genes.end(), sn.id) != ind.genes.end())
                continue;
            candidates.push_back(sn.id);
        }
        if (candidates.empty()) return;
        ind.genes[gi] = candidates[rng.index(candidates.size())];
        evaluate(ind);
    };

    for (int iter = 0; iter < params.max_iterations; ++iter) {
        std::vector<Individual> next;
        next.reserve(static_cast<std::size_t>(x));
        while (static_cast<int>(next.size()) < x) {
            Individual c1 = pop[roulette_pick()];
            Individual c2 = pop[roulette_pick()];
            if (rng.bernoulli(params.crossover_prob)) {
                exchange_crossover(c1.genes, c2.genes, rng);
            }
            for (Individual* c : {&c1, &c2}) {
                if (static_cast<int>(next.size()) >= x) break;
                auto repaired = feasibility_repair(*c, vnr, net, rng);
                if (!repaired) continue;
                evaluate(*repaired);
                if (rng.bernoulli(params.mutation_prob)) mutate_random_gene(*repaired);
                next.push_back(std::move(*repaired));
            }
        }
        pop = std::move(next);
    }

    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual& a, const Individual& b) {
                         return a.fitness < b.fitness;
                     });
    return pop;
}

}  // namespace vne
