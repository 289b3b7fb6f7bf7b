#pragma once

// Independent reference implementations used only by tests. These deliberately
// avoid the library's search code paths so a result can be cross-checked
// through a second route.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vne/model.hpp"
#include "vne/pathing.hpp"

namespace oracle {

// Bellman-Ford over non-excluded links; +inf when dst is unreachable.
inline double bellman_ford_cost(const vne::SubstrateNetwork& net, const vne::WeightView& view,
                                int src, int dst) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(net.node_count()), inf);
    dist[static_cast<std::size_t>(src)] = 0.0;
    for (int round = 0; round < net.node_count() - 1; ++round) {
        bool changed = false;
        for (int li = 0; li < net.link_count(); ++li) {
            if (view.excluded[static_cast<std::size_t>(li)]) continue;
            const auto& l = net.link(li);
            const double w = view.weight[static_cast<std::size_t>(li)];
            const auto relax = [&](int u, int v) {
                if (dist[static_cast<std::size_t>(u)] + w < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
                    changed = true;
                }
            };
            if (dist[static_cast<std::size_t>(l.a)] < inf) relax(l.a, l.b);
            if (dist[static_cast<std::size_t>(l.b)] < inf) relax(l.b, l.a);
        }
        if (!changed) break;
    }
    return dist[static_cast<std::size_t>(dst)];
}

// Exhaustive search over all injective cpu-feasible node assignments, with the
// embedding price written out longhand against the given distance matrix.
inline double brute_force_best_fitness(const vne::VirtualNetworkRequest& vnr,
                                       const vne::SubstrateNetwork& net,
                                       const vne::DistanceMatrix& dm, double penalty) {
    const std::size_t n = vnr.nodes.size();
    std::vector<int> assign(n, -1);
    std::vector<char> used(static_cast<std::size_t>(net.node_count()), 0);
    double best = std::numeric_limits<double>::infinity();

    auto evaluate = [&]() {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            total += static_cast<double>(vnr.nodes[i].cpu_demand) *
                     net.node(assign[i]).cpu_unit_price;
        for (const auto& vl : vnr.links) {
            const double w = dm.at(assign[static_cast<std::size_t>(vl.a)],
                                   assign[static_cast<std::size_t>(vl.b)]);
            if (w == vne::DistanceMatrix::infeasible) return penalty;
            total += static_cast<double>(vl.bw_demand) * w;
        }
        return total;
    };

    const auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            best = std::min(best, evaluate());
            return;
        }
        for (int s = 0; s < net.node_count(); ++s) {
            if (used[static_cast<std::size_t>(s)]) continue;
            if (net.node(s).cpu_residual < vnr.nodes[i].cpu_demand) continue;
            used[static_cast<std::size_t>(s)] = 1;
            assign[i] = s;
            self(self, i + 1);
            used[static_cast<std::size_t>(s)] = 0;
        }
    };
    recurse(recurse, 0);
    return best;
}

// Residual snapshot for exact state comparisons.
struct NetworkSnapshot {
    std::vector<int> cpu_residual;
    std::vector<int> bw_residual;
    std::vector<int> bw_used;

    static NetworkSnapshot of(const vne::SubstrateNetwork& net) {
        NetworkSnapshot s;
        for (const auto& n : net.nodes()) s.cpu_residual.push_back(n.cpu_residual);
        for (const auto& l : net.links()) {
            s.bw_residual.push_back(l.bw_residual);
            s.bw_used.push_back(l.bw_used);
        }
        return s;
    }
    bool operator==(const NetworkSnapshot&) const = default;
};

}  // namespace oracle
