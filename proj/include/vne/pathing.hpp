#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "vne/model.hpp"

namespace vne {

// Per-link routing weights for one search. Links whose residual bandwidth is
// below the active constraint are excluded outright instead of carrying a
// large finite weight, so no returned path can silently violate it.
struct WeightView {
    std::vector<double> weight;   // indexed by link index
    std::vector<char> excluded;   // indexed by link index
};

// Cheapest-feasible-path aggregate weights between all node pairs.
// Infeasible pairs carry +infinity.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> d;

    static constexpr double infeasible = std::numeric_limits<double>::infinity();

    double at(int i, int j) const {
        return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    }
    bool feasible(int i, int j) const { return at(i, j) != infeasible; }
};

// Congestion-adjusted weights: a link whose used bandwidth exceeds the network
// average is charged an extra factor proportional to how far it sits between
// the average and the maximum; all other links keep their unit price. Links
// with residual below min_bw are excluded.
WeightView load_balanced_weights(const SubstrateNetwork& net, double lambda, int min_bw);

// Plain unit-price weights with no exclusions (the baseline's view).
WeightView static_price_weights(const SubstrateNetwork& net);

// Minimum-total-weight simple path over non-excluded links, returned as link
// indices from src to dst. Ties are broken toward the lexicographically
// smallest node-id sequence so runs are reproducible. nullopt when no feasible
// path exists.
std::optional<std::vector<int>> shortest_path(const SubstrateNetwork& net,
                                              const WeightView& view, int src, int dst);

// Aggregate weight of a path under a view.
double path_weight(const WeightView& view, const std::vector<int>& path);

// Cheapest aggregate weight between every node pair under the view; used for
// fitness estimation only, never for allocation.
DistanceMatrix all_pairs_estimate(const SubstrateNetwork& net, const WeightView& view);

}  // namespace vne
