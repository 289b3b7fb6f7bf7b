#include "vne/linkmap.hpp"

#include <algorithm>
#include <numeric>

#include "vne/pathing.hpp"

namespace vne {

namespace {

// virtual link indices in nonincreasing bandwidth demand order, ties by index
std::vector<std::size_t> demand_order(const VirtualNetworkRequest& vnr) {
    std::vector<std::size_t> order(vnr.links.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return vnr.links[a].bw_demand > vnr.links[b].bw_demand;
    });
    return order;
}

EmbeddingPlan plan_skeleton(const VirtualNetworkRequest& vnr, const std::vector<int>& node_map) {
    EmbeddingPlan plan;
    plan.vnr_id = vnr.id;
    plan.node_map = node_map;
    plan.node_cpu_demands.reserve(vnr.nodes.size());
    for (const auto& vn : vnr.nodes) plan.node_cpu_demands.push_back(vn.cpu_demand);
    plan.link_paths.resize(vnr.links.size());
    plan.link_bw_demands.reserve(vnr.links.size());
    plan.link_ends.reserve(vnr.links.size());
    for (const auto& vl : vnr.links) {
        plan.link_bw_demands.push_back(vl.bw_demand);
        plan.link_ends.emplace_back(vl.a, vl.b);
    }
    return plan;
}

}  // namespace

LinkMapOutcome map_links(const VirtualNetworkRequest& vnr, const std::vector<int>& node_map,
                         const SubstrateNetwork& net, double lambda) {
    EmbeddingPlan plan = plan_skeleton(vnr, node_map);
    SubstrateNetwork scratch = net;  // tentative consumption lives here only

    for (std::size_t j : demand_order(vnr)) {
        const auto& vl = vnr.links[j];
        const WeightView view = load_balanced_weights(scratch, lambda, vl.bw_demand);
        const int src = node_map[static_cast<std::size_t>(vl.a)];
        const int dst = node_map[static_cast<std::size_t>(vl.b)];
        auto path = shortest_path(scratch, view, src, dst);
        if (!path) return {std::nullopt, static_cast<int>(j)};
        for (int idx : *path) scratch.consume_bandwidth(idx, vl.bw_demand);
        plan.link_paths[j] = std::move(*path);
    }
    plan.objective = objective_value(net, plan);
    return {std::move(plan), -1};
}

LinkMapOutcome map_links_static(const VirtualNetworkRequest& vnr,
                                const std::vector<int>& node_map,
                                const SubstrateNetwork& net) {
    EmbeddingPlan plan = plan_skeleton(vnr, node_map);
    const WeightView view = static_price_weights(net);

    for (std::size_t j : demand_order(vnr)) {
        const auto& vl = vnr.links[j];
        const int src = node_map[static_cast<std::size_t>(vl.a)];
        const int dst = node_map[static_cast<std::size_t>(vl.b)];
        auto path = shortest_path(net, view, src, dst);
        if (!path) return {std::nullopt, static_cast<int>(j)};
        plan.link_paths[j] = std::move(*path);
    }
    plan.objective = objective_value(net, plan);
    return {std::move(plan), -1};
}

}  // namespace vne
