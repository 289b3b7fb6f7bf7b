#include "vne/ga_common.hpp"

#include <algorithm>
#include <set>

namespace vne {

PopulationStats PopulationStats::of(const std::vector<Individual>& pop) {
    PopulationStats s;
    if (pop.empty()) return s;
    double sum = 0.0;
    s.min = s.max = pop.front().fitness;
    for (const auto& ind : pop) {
        sum += ind.fitness;
        s.min = std::min(s.min, ind.fitness);
        s.max = std::max(s.max, ind.fitness);
    }
    s.mean = sum / static_cast<double>(pop.size());
    if (s.min == s.max) s.mean = s.min;  // keep the degenerate case exact
    return s;
}

double infeasible_penalty(const VirtualNetworkRequest& vnr, const SubstrateNetwork& net) {
    return static_cast<double>(vnr.total_demand()) *
           static_cast<double>(net.max_unit_price()) *
           static_cast<double>(std::max(1, net.link_count()));
}

double mapping_fitness(const std::vector<int>& genes, const VirtualNetworkRequest& vnr,
                       const DistanceMatrix& dm, const SubstrateNetwork& net, double penalty) {
    double total = 0.0;
    for (std::size_t i = 0; i < genes.size(); ++i)
        total += static_cast<double>(vnr.nodes[i].cpu_demand) *
                 net.node(genes[i]).cpu_unit_price;
    for (const auto& vl : vnr.links) {
        const double w = dm.at(genes[static_cast<std::size_t>(vl.a)],
                               genes[static_cast<std::size_t>(vl.b)]);
        if (w == DistanceMatrix::infeasible) return penalty;
        total += static_cast<double>(vl.bw_demand) * w;
    }
    return total;
}

bool genes_feasible(const std::vector<int>& genes, const VirtualNetworkRequest& vnr,
                    const SubstrateNetwork& net) {
    std::set<int> seen;
    for (std::size_t i = 0; i < genes.size(); ++i) {
        if (!seen.insert(genes[i]).second) return false;
        if (net.node(genes[i]).cpu_residual < vnr.nodes[i].cpu_demand) return false;
    }
    return true;
}

std::optional<std::vector<int>> random_feasible_genes(const VirtualNetworkRequest& vnr,
                                                      const SubstrateNetwork& net, Rng& rng,
                                                      int max_attempts) {
    const std::size_t n = vnr.nodes.size();
    std::vector<int> genes(n);
    std::vector<int> candidates;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::set<int> used;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            candidates.clear();
            for (const auto& sn : net.nodes()) {
                if (sn.cpu_residual >= vnr.nodes[i].cpu_demand && !used.count(sn.id))
                    candidates.push_back(sn.id);
            }
            if (candidates.empty()) {
                ok = false;
                break;
            }
            genes[i] = candidates[rng.index(candidates.size())];
            used.insert(genes[i]);
        }
        if (ok) return genes;
    }
    return std::nullopt;
}

bool repair_genes(std::vector<int>& genes, const VirtualNetworkRequest& vnr,
                  const SubstrateNetwork& net, Rng& rng) {
    std::set<int> used;
    std::vector<std::size_t> broken;
    for (std::size_t i = 0; i < genes.size(); ++i) {
        const bool duplicate = used.count(genes[i]) > 0;
        const bool starved = net.node(genes[i]).cpu_residual < vnr.nodes[i].cpu_demand;
        if (duplicate || starved) {
            broken.push_back(i);
        } else {
            used.insert(genes[i]);
        }
    }
    std::vector<int> candidates;
    for (std::size_t i : broken) {
        candidates.clear();
        for (const auto& sn : net.nodes()) {
            if (sn.cpu_residual >= vnr.nodes[i].cpu_demand && !used.count(sn.id))
                candidates.push_back(sn.id);
        }
        if (candidates.empty()) return false;
        genes[i] = candidates[rng.index(candidates.size())];
        used.insert(genes[i]);
    }
    return true;
}

std::optional<Individual> feasibility_repair(const Individual& ind,
                                             const VirtualNetworkRequest& vnr,
                                             const SubstrateNetwork& net, Rng& rng) {
    Individual out = ind;
    if (repair_genes(out.genes, vnr, net, rng)) return out;
    auto fresh = random_feasible_genes(vnr, net, rng);
    if (!fresh) return std::nullopt;
    out.genes = std::move(*fresh);
    return out;
}

void exchange_crossover(std::vector<int>& child1, std::vector<int>& child2, Rng& rng) {
    const int n = static_cast<int>(child1.size());
    if (n == 0) return;
    const int max_swaps = (n + 1) / 2;
    const int k = rng.uniform_int(1, max_swaps);
    for (int pos : rng.sample_indices(n, k))
        std::swap(child1[static_cast<std::size_t>(pos)], child2[static_cast<std::size_t>(pos)]);
}

}  // namespace vne
