#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vne/model.hpp"

namespace vne {

struct SubstrateConfig {
    int domain_count = 4;
    int nodes_per_domain = 30;
    double intra_edge_prob = 0.5;
    int inter_links_per_domain_pair = 3;
    std::pair<int, int> cpu_range{100, 300};
    std::pair<int, int> intra_bw_range{1000, 3000};
    std::pair<int, int> inter_bw_range{3000, 6000};
    std::pair<int, int> price_range{1, 10};

    void validate() const;  // throws std::invalid_argument naming the field
};

struct VnrStreamConfig {
    double mean_arrivals_per_100_units = 10.0;
    std::pair<int, int> vnr_node_range{5, 10};
    std::pair<int, int> cpu_demand_range{1, 10};
    std::pair<int, int> bw_demand_range{1, 10};
    double lifetime = 1000.0;
    double horizon = 2200.0;

    void validate() const;
};

// Seeded multi-domain substrate generator. Intra-domain links are drawn
// per-pair with intra_edge_prob and augmented with a random spanning tree per
// domain; every ordered domain pair gets inter_links_per_domain_pair links
// between uniformly chosen border nodes. Identical (cfg, seed) yields an
// identical network.
SubstrateNetwork generate_substrate(const SubstrateConfig& cfg, std::uint64_t seed);

// Poisson arrival stream of connected virtual network requests over the
// configured horizon. Deterministic per (cfg, seed) and drawn from an RNG
// stream independent of the substrate generator's.
std::vector<VirtualNetworkRequest> generate_vnr_stream(const VnrStreamConfig& cfg,
                                                       std::uint64_t seed);

}  // namespace vne
