#include "vne/lbhga.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vne {

double crossover_probability(double f1, double f2, const PopulationStats& stats,
                             double lambda1, double lambda2) {
    if (stats.max == stats.mean || stats.mean == stats.min) return 0.5;
    const double fmin = std::min(f1, f2);
    const double fmax = std::max(f1, f2);
    double p;
    if (fmin >= stats.mean) {
        p = lambda1 * (fmin - stats.mean) / (stats.max - stats.mean);
    } else if (fmax <= stats.mean) {
        p = lambda2 * (1.0 - (stats.mean - fmax) / (stats.mean - stats.min));
    } else {
        const double s_max = (fmax - stats.mean) / (stats.max - stats.mean);
        const double s_min = (stats.mean - fmin) / (stats.mean - stats.min);
        p = s_max > s_min ? lambda1 * s_max : lambda2 * (1.0 - s_min);
    }
    return std::clamp(p, 0.0, 1.0);
}

namespace {

void deposit_from(const std::vector<Individual>& pop, PheromoneTable& table) {
    if (pop.empty()) return;
    double max_fitness = pop.front().fitness;
    for (const auto& ind : pop) max_fitness = std::max(max_fitness, ind.fitness);
    for (const auto& ind : pop) {
        if (ind.genes.empty()) continue;
        const double share =
            (max_fitness - ind.fitness) / static_cast<double>(ind.genes.size());
        for (int node : ind.genes) table.add(node, share);
    }
}

}  // namespace

void init_pheromones(const std::vector<Individual>& pop, PheromoneTable& table) {
    deposit_from(pop, table);
}

void crossover_pheromone_update(const std::vector<Individual>& offspring,
                                PheromoneTable& table) {
    table.dissipate();
    deposit_from(offspring, table);
}

std::vector<int> select_mutation_genes(const Individual& ind, const PheromoneTable& table,
                                       int count, Rng& rng) {
    const std::size_t g = ind.genes.size();
    std::vector<double> tau(g);
    double total = 0.0;
    for (std::size_t i = 0; i < g; ++i) {
        tau[i] = table.get(ind.genes[i]);
        total += tau[i];
    }
    // weight = complement of the pheromone share; sums to g - 1
    std::vector<double> weight(g);
    for (std::size_t i = 0; i < g; ++i) weight[i] = 1.0 - tau[i] / total;

    std::vector<int> picked;
    std::vector<char> taken(g, 0);
    for (int k = 0; k < count; ++k) {
        double remaining = 0.0;
        for (std::size_t i = 0; i < g; ++i)
            if (!taken[i]) remaining += weight[i];
        double r = rng.uniform01() * remaining;
        int chosen = -1;
        for (std::size_t i = 0; i < g; ++i) {
            if (taken[i]) continue;
            chosen = static_cast<int>(i);
            r -= weight[i];
            if (r < 0.0) break;
        }
        taken[static_cast<std::size_t>(chosen)] = 1;
        picked.push_back(chosen);
    }
    return picked;
}

void mutate(Individual& ind, const std::vector<int>& gene_set,
            const VirtualNetworkRequest& vnr, const SubstrateNetwork& net,
            const DistanceMatrix& dm, double penalty, PheromoneTable& table, Rng& rng) {
    if (gene_set.empty()) return;
    const double fitness_before = ind.fitness;
    std::set<int> in_use(ind.genes.begin(), ind.genes.end());
    std::vector<int> old_nodes, new_nodes;
    std::vector<int> candidates;
    for (int gi : gene_set) {
        const std::size_t i = static_cast<std::size_t>(gi);
        candidates.clear();
        for (const auto& sn : net.nodes()) {
            if (sn.cpu_residual >= vnr.nodes[i].cpu_demand && !in_use.count(sn.id))
                candidates.push_back(sn.id);
        }
        if (candidates.empty()) continue;  // no feasible target, gene stays put
        const int target = candidates[rng.index(candidates.size())];
        old_nodes.push_back(ind.genes[i]);
        new_nodes.push_back(target);
        in_use.erase(ind.genes[i]);
        in_use.insert(target);
        ind.genes[i] = target;
    }
    if (old_nodes.empty()) return;
    ind.fitness = mapping_fitness(ind.genes, vnr, dm, net, penalty);

    const double delta =
        std::abs(ind.fitness - fitness_before) / static_cast<double>(gene_set.size());
    if (fitness_before > ind.fitness) {
        for (int node : old_nodes) table.add(node, -delta);
        for (int node : new_nodes) table.add(node, delta);
    } else if (fitness_before < ind.fitness) {
        for (int node : old_nodes) table.add(node, delta);
        for (int node : new_nodes) table.add(node, -delta);
    }
}

std::optional<std::vector<Individual>> lbhga_run(const VirtualNetworkRequest& vnr,
                                                 const SubstrateNetwork& net,
                                                 const LbhgaParams& params,
                                                 std::uint64_t seed,
                                                 const IterationObserver& observer) {
    Rng rng(seed);
    const WeightView view = load_balanced_weights(net, params.lambda_weights, vnr.min_bw_demand());
    const DistanceMatrix dm = all_pairs_estimate(net, view);
    const double penalty = infeasible_penalty(vnr, net);

    auto evaluate = [&](Individual& ind) {
        ind.fitness = mapping_fitness(ind.genes, vnr, dm, net, penalty);
    };
    auto fresh_individual = [&]() -> std::optional<Individual> {
        auto genes = random_feasible_genes(vnr, net, rng);
        if (!genes) return std::nullopt;
        Individual ind;
        ind.genes = std::move(*genes);
        evaluate(ind);
        return ind;
    };

    const int x = params.population;
    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(x));
    for (int i = 0; i < x; ++i) {
        auto ind = fresh_individual();
        if (!ind) return std::nullopt;
        pop.push_back(std::move(*ind));
    }

    PheromoneTable table(params.rho);
    init_pheromones(pop, table);

    auto by_fitness = [](const Individual& a, const Individual& b) {
        return a.fitness < b.fitness;
    };
    auto best_of = [&](const std::vector<Individual>& p) {
        double best = p.front().fitness;
        for (const auto& ind : p) best = std::min(best, ind.fitness);
        return best;
    };

    double best_so_far = best_of(pop);
    int stagnant = 0;
    const int cataclysm_after =
        static_cast<int>(std::ceil(0.6 * static_cast<double>(params.max_iterations)));

    for (int iter = 0; iter < params.max_iterations; ++iter) {
        std::stable_sort(pop.begin(), pop.end(), by_fitness);
        const int survivors = (x + 1) / 2;
        pop.resize(static_cast<std::size_t>(survivors));
        const PopulationStats stats = PopulationStats::of(pop);

        std::vector<Individual> offspring;
        const int wanted = x - survivors;
        int attempts = 0;
        while (static_cast<int>(offspring.size()) < wanted) {
            // a livelock is possible when every pairing yields probability 0;
            // after enough failed draws fall back to fresh random individuals
            if (++attempts > 20 * x) {
                while (static_cast<int>(offspring.size()) < wanted) {
                    auto ind = fresh_individual();
                    offspring.push_back(ind ? std::move(*ind) : pop.front());
                }
                break;
            }
            std::size_t i = rng.index(pop.size());
            std::size_t j = pop.size() > 1 ? rng.index(pop.size()) : i;
            if (pop.size() > 1) {
                while (j == i) j = rng.index(pop.size());
            }
            const double pc =
                crossover_probability(pop[i].fitness, pop[j].fitness, stats,
                                      params.lambda1, params.lambda2);
            if (rng.uniform01() >= pc) continue;
            Individual c1 = pop[i];
            Individual c2 = pop[j];
            exchange_crossover(c1.genes, c2.genes, rng);
            for (Individual* c : {&c1, &c2}) {
                if (static_cast<int>(offspring.size()) >= wanted) break;
                auto repaired = feasibility_repair(*c, vnr, net, rng);
                if (!repaired) continue;
                evaluate(*repaired);
                offspring.push_back(std::move(*repaired));
            }
        }

        crossover_pheromone_update(offspring, table);

        for (auto& child : offspring) {
            if (!rng.bernoulli(params.mutation_prob)) continue;
            const int genes_to_mutate =
                std::min(params.mutation_gene_count,
                         static_cast<int>(child.genes.size()) - 1);
            if (genes_to_mutate < 1) continue;
            const auto gene_set = select_mutation_genes(child, table, genes_to_mutate, rng);
            mutate(child, gene_set, vnr, net, dm, penalty, table, rng);
        }

        for (auto& child : offspring) pop.push_back(std::move(child));

        const double best_now = best_of(pop);
        if (best_now < best_so_far) {
            best_so_far = best_now;
            stagnant = 0;
        } else {
            ++stagnant;
            if (stagnant >= cataclysm_after) {
                std::stable_sort(pop.begin(), pop.end(), by_fitness);
                const int keep = (x + 2) / 3;
                pop.resize(static_cast<std::size_t>(std::min(keep, x)));
                while (static_cast<int>(pop.size()) < x) {
                    auto ind = fresh_individual();
                    pop.push_back(ind ? std::move(*ind) : pop.front());
                }
                stagnant = 0;
            }
        }
        if (observer) observer(iter, best_so_far, static_cast<int>(pop.size()));
    }

    std::stable_sort(pop.begin(), pop.end(), by_fitness);
    return pop;
}

}  // namespace vne
