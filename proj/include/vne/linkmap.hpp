#pragma once

#include <optional>
#include <vector>

#include "vne/model.hpp"

namespace vne {

struct LinkMapOutcome {
    std::optional<EmbeddingPlan> plan;
    int failed_virtual_link = -1;  // virtual link index when mapping failed
};

// Maps every virtual link onto a substrate path, processing links in
// nonincreasing bandwidth-demand order (ties by link index). Weights are
// recomputed before each search against residuals that include the tentative
// consumption of earlier links in the same plan, with the link's own demand as
// the hard constraint. All work happens on a scratch copy, so a failure leaves
// the caller's network untouched and names the failing virtual link.
LinkMapOutcome map_links(const VirtualNetworkRequest& vnr, const std::vector<int>& node_map,
                         const SubstrateNetwork& net, double lambda);

// Blind variant: unit-price weights, no congestion adjustment, no residual
// pre-check, no tentative tracking. The returned plan may violate residuals;
// the caller finds out at allocation time. Fails only when the graph offers no
// path at all between two mapped endpoints.
LinkMapOutcome map_links_static(const VirtualNetworkRequest& vnr,
                                const std::vector<int>& node_map,
                                const SubstrateNetwork& net);

}  // namespace vne
