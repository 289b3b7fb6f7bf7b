#include "vne/topology.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "vne/rng.hpp"

namespace vne {

namespace {

constexpr std::uint64_t kTopologySalt = 0x746f706f6c6f6779ULL;
constexpr std::uint64_t kWorkloadSalt = 0x776f726b6c6f6164ULL;

// Probability of adding each non-tree edge when building a VNR graph.
constexpr double kVnrExtraEdgeProb = 0.5;

void check_range(const std::pair<int, int>& r, const char* name) {
    if (r.first > r.second || r.first < 0)
        throw std::invalid_argument(std::string(name) + " range is empty or negative");
}

}  // namespace

void SubstrateConfig::validate() const {
    if (domain_count < 1) throw std::invalid_argument("domain_count must be >= 1");
    if (nodes_per_domain < 1) throw std::invalid_argument("nodes_per_domain must be >= 1");
    if (!(intra_edge_prob > 0.0 && intra_edge_prob <= 1.0))
        throw std::invalid_argument("intra_edge_prob must be in (0,1]");
    if (domain_count > 1 && inter_links_per_domain_pair < 1)
        throw std::invalid_argument(
            "inter_links_per_domain_pair must be >= 1 for a multi-domain network");
    if (inter_links_per_domain_pair < 0)
        throw std::invalid_argument("inter_links_per_domain_pair must be >= 0");
    check_range(cpu_range, "cpu");
    check_range(intra_bw_range, "intra_bw");
    check_range(inter_bw_range, "inter_bw");
    check_range(price_range, "price");
    if (price_range.first < 1) throw std::invalid_argument("price range must start at >= 1");
}

void VnrStreamConfig::validate() const {
    if (mean_arrivals_per_100_units <= 0.0)
        throw std::invalid_argument("mean_arrivals_per_100_units must be > 0");
    check_range(vnr_node_range, "vnr_node");
    if (vnr_node_range.first < 1) throw std::invalid_argument("vnr_node range must start at >= 1");
    check_range(cpu_demand_range, "cpu_demand");
    check_range(bw_demand_range, "bw_demand");
    if (cpu_demand_range.first < 1 || bw_demand_range.first < 1)
        throw std::invalid_argument("demand ranges must start at >= 1");
    if (lifetime <= 0.0) throw std::invalid_argument("lifetime must be > 0");
    if (horizon < 0.0) throw std::invalid_argument("horizon must be >= 0");
}

SubstrateNetwork generate_substrate(const SubstrateConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    Rng rng = Rng::stream(seed, kTopologySalt);
    SubstrateNetwork net;
    net.set_domain_count(cfg.domain_count);

    for (int d = 0; d < cfg.domain_count; ++d) {
        for (int i = 0; i < cfg.nodes_per_domain; ++i) {
            int cpu = rng.uniform_int(cfg.cpu_range.first, cfg.cpu_range.second);
            int price = rng.uniform_int(cfg.price_range.first, cfg.price_range.second);
            net.add_node(d, cpu, price);
        }
    }

    auto add_intra = [&](int a, int b) {
        if (net.find_link(a, b) >= 0) return;
        int bw = rng.uniform_int(cfg.intra_bw_range.first, cfg.intra_bw_range.second);
        int price = rng.uniform_int(cfg.price_range.first, cfg.price_range.second);
        net.add_link(a, b, bw, price, false);
    };

    for (int d = 0; d < cfg.domain_count; ++d) {
        const int base = d * cfg.nodes_per_domain;
        for (int i = 0; i < cfg.nodes_per_domain; ++i) {
            for (int j = i + 1; j < cfg.nodes_per_domain; ++j) {
                if (rng.bernoulli(cfg.intra_edge_prob)) add_intra(base + i, base + j);
            }
        }
        // random spanning tree keeps each domain connected regardless of the
        // edge probability draw
        std::vector<int> order(static_cast<std::size_t>(cfg.nodes_per_domain));
        for (int i = 0; i < cfg.nodes_per_domain; ++i) order[static_cast<std::size_t>(i)] = base + i;
        rng.shuffle(order);
        for (int i = 1; i < cfg.nodes_per_domain; ++i) {
            int parent = order[static_cast<std::size_t>(rng.uniform_int(0, i - 1))];
            add_intra(order[static_cast<std::size_t>(i)], parent);
        }
    }

    for (int d1 = 0; d1 < cfg.domain_count; ++d1) {
        for (int d2 = 0; d2 < cfg.domain_count; ++d2) {
            if (d1 == d2) continue;
            for (int k = 0; k < cfg.inter_links_per_domain_pair; ++k) {
                for (int attempt = 0; attempt < 1000; ++attempt) {
                    int u = d1 * cfg.nodes_per_domain + rng.uniform_int(0, cfg.nodes_per_domain - 1);
                    int v = d2 * cfg.nodes_per_domain + rng.uniform_int(0, cfg.nodes_per_domain - 1);
                    if (net.find_link(u, v) >= 0) continue;
                    int bw = rng.uniform_int(cfg.inter_bw_range.first, cfg.inter_bw_range.second);
                    int price = rng.uniform_int(cfg.price_range.first, cfg.price_range.second);
                    net.add_link(u, v, bw, price, true);
                    break;
                }
            }
        }
    }
    return net;
}

std::vector<VirtualNetworkRequest> generate_vnr_stream(const VnrStreamConfig& cfg,
                                                       std::uint64_t seed) {
    cfg.validate();
    Rng rng = Rng::stream(seed, kWorkloadSalt);
    std::vector<VirtualNetworkRequest> stream;
    const double rate = cfg.mean_arrivals_per_100_units / 100.0;
    double t = 0.0;
    int next_id = 0;
    for (;;) {
        t += rng.exponential(rate);
        if (t > cfg.horizon) break;
        VirtualNetworkRequest vnr;
        vnr.id = next_id++;
        vnr.arrival_time = t;
        vnr.lifetime = cfg.lifetime;
        int n = rng.uniform_int(cfg.vnr_node_range.first, cfg.vnr_node_range.second);
        for (int i = 0; i < n; ++i) {
            VirtualNode vn;
            vn.id = i;
            vn.cpu_demand = rng.uniform_int(cfg.cpu_demand_range.first, cfg.cpu_demand_range.second);
            vnr.nodes.push_back(vn);
        }
        std::set<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) {
            int parent = rng.uniform_int(0, i - 1);
            edges.insert({parent, i});
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (edges.count({i, j})) continue;
                if (rng.bernoulli(kVnrExtraEdgeProb)) edges.insert({i, j});
            }
        }
        for (const auto& [a, b] : edges) {
            VirtualLink vl;
            vl.a = a;
            vl.b = b;
            vl.bw_demand = rng.uniform_int(cfg.bw_demand_range.first, cfg.bw_demand_range.second);
            vnr.links.push_back(vl);
        }
        stream.push_back(std::move(vnr));
    }
    return stream;
}

}  // namespace vne
