#include "vne/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "vne/linkmap.hpp"

namespace vne {

namespace {

constexpr std::uint64_t kAlgorithmSalt = 0x616c676f72756e73ULL;

struct QueuedEvent {
    double time;
    int kind;  // 0 = expiry, 1 = arrival; expiries first on ties
    int vnr_id;

    bool operator>(const QueuedEvent& o) const {
        if (time != o.time) return time > o.time;
        if (kind != o.kind) return kind > o.kind;
        return vnr_id > o.vnr_id;
    }
};

}  // namespace

std::string algorithm_name(Algorithm a) {
    return a == Algorithm::lbhga ? "lbhga" : "tga";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "lbhga") return Algorithm::lbhga;
    if (name == "tga") return Algorithm::tga;
    throw std::invalid_argument("unknown algorithm '" + name + "' (expected lbhga or tga)");
}

double link_load_variance(const SubstrateNetwork& net) {
    if (net.link_count() == 0) return 0.0;
    double sum = 0.0;
    for (const auto& l : net.links()) sum += l.bw_used;
    const double mean = sum / static_cast<double>(net.link_count());
    double sq = 0.0;
    for (const auto& l : net.links()) {
        const double d = static_cast<double>(l.bw_used) - mean;
        sq += d * d;
    }
    return sq / static_cast<double>(net.link_count());
}

long long revenue_of(const VirtualNetworkRequest& vnr) { return vnr.total_demand(); }

long long cost_of(const EmbeddingPlan& plan) {
    long long total = 0;
    for (int d : plan.node_cpu_demands) total += d;
    for (std::size_t j = 0; j < plan.link_paths.size(); ++j)
        total += static_cast<long long>(plan.link_bw_demands[j]) *
                 static_cast<long long>(plan.link_paths[j].size());
    return total;
}

SimulationResult run_simulation_on(const SubstrateNetwork& substrate,
                                   const std::vector<VirtualNetworkRequest>& stream,
                                   double horizon, const SimParams& params,
                                   std::uint64_t seed) {
    SimulationResult result;
    SubstrateNetwork net = substrate;

    std::priority_queue<QueuedEvent, std::vector<QueuedEvent>, std::greater<>> queue;
    for (const auto& vnr : stream) queue.push({vnr.arrival_time, 1, vnr.id});

    long long accepted = 0, refused = 0;
    long long revenue_sum = 0, cost_sum = 0, quotation_sum = 0;
    double runtime_ms = 0.0;

    double bucket_end = params.bucket_width;
    auto flush_bucket = [&](double end) {
        MetricsRecord rec;
        rec.bucket_end = end;
        rec.link_load_variance = link_load_variance(net);
        rec.revenue = revenue_sum;
        rec.cost = cost_sum;
        rec.revenue_cost_ratio =
            cost_sum > 0 ? static_cast<double>(revenue_sum) / static_cast<double>(cost_sum)
                         : 0.0;
        rec.accepted = accepted;
        rec.refused = refused;
        rec.acceptance_ratio =
            accepted + refused > 0
                ? static_cast<double>(accepted) / static_cast<double>(accepted + refused)
                : 0.0;
        rec.avg_quotation =
            accepted > 0 ? static_cast<double>(quotation_sum) / static_cast<double>(accepted)
                         : 0.0;
        rec.total_runtime_ms = runtime_ms;
        rec.avg_runtime_ms = accepted > 0 ? runtime_ms / static_cast<double>(accepted) : 0.0;
        result.records.push_back(rec);
    };

    auto embed_arrival = [&](const VirtualNetworkRequest& vnr) -> bool {
        const std::uint64_t run_seed =
            splitmix64(splitmix64(seed ^ kAlgorithmSalt) ^ static_cast<std::uint64_t>(vnr.id));
        const auto t0 = std::chrono::steady_clock::now();
        bool placed = false;
        EmbeddingPlan plan;

        if (params.algorithm == Algorithm::lbhga) {
            auto ranked = lbhga_run(vnr, net, params.lbhga, run_seed);
            if (ranked) {
                const int tries =
                    std::min<int>(params.lbhga_retry_limit, static_cast<int>(ranked->size()));
                for (int k = 0; k < tries && !placed; ++k) {
                    auto outcome =
                        map_links(vnr, (*ranked)[static_cast<std::size_t>(k)].genes, net,
                                  params.lbhga.lambda_weights);
                    if (outcome.plan) {
                        plan = std::move(*outcome.plan);
                        placed = true;
                    }
                }
            }
        } else {
            auto ranked = tga_run(vnr, net, params.tga, run_seed);
            if (ranked) {
                const int tries =
                    std::min<int>(params.tga_retry_limit, static_cast<int>(ranked->size()));
                for (int k = 0; k < tries && !placed; ++k) {
                    auto outcome =
                        map_links_static(vnr, (*ranked)[static_cast<std::size_t>(k)].genes, net);
                    if (!outcome.plan) continue;
                    // the blind paths may oversubscribe; the ledger is the judge
                    try {
                        allocate(net, *outcome.plan);
                    } catch (const ModelError&) {
                        continue;
                    }
                    release(net, outcome.plan->vnr_id);
                    plan = std::move(*outcome.plan);
                    placed = true;
                }
            }
        }

        const auto t1 = std::chrono::steady_clock::now();
        runtime_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (!placed) return false;
        allocate(net, plan);
        return true;
    };

    while (!queue.empty()) {
        const QueuedEvent ev = queue.top();
        if (ev.time > horizon) break;
        while (bucket_end < ev.time && bucket_end <= horizon) {
            flush_bucket(bucket_end);
            bucket_end += params.bucket_width;
        }
        queue.pop();

        if (ev.kind == 0) {
            release(net, ev.vnr_id);
            result.events.push_back({SimEvent::Kind::expired, ev.time, ev.vnr_id, 0, 0, 0});
            continue;
        }

        const auto& vnr = stream[static_cast<std::size_t>(ev.vnr_id)];
        if (embed_arrival(vnr)) {
            ++accepted;
            const auto& plan = net.active_plans().at(vnr.id);
            const long long rev = revenue_of(vnr);
            const long long cst = cost_of(plan);
            revenue_sum += rev;
            cost_sum += cst;
            quotation_sum += plan.objective;
            result.events.push_back(
                {SimEvent::Kind::accepted, ev.time, vnr.id, rev, cst, plan.objective});
            queue.push({ev.time + vnr.lifetime, 0, vnr.id});
        } else {
            ++refused;
            result.events.push_back({SimEvent::Kind::refused, ev.time, vnr.id, 0, 0, 0});
        }
    }

    while (bucket_end <= horizon) {
        flush_bucket(bucket_end);
        bucket_end += params.bucket_width;
    }
    // partial tail bucket when the horizon is not a multiple of the width
    if (!result.records.empty() && result.records.back().bucket_end < horizon) {
        flush_bucket(horizon);
    } else if (result.records.empty() && horizon > 0.0) {
        flush_bucket(horizon);
    }

    result.final_network = std::move(net);
    result.accepted = accepted;
    result.refused = refused;
    return result;
}

SimulationResult run_simulation(const SubstrateConfig& substrate_cfg,
                                const VnrStreamConfig& stream_cfg, const SimParams& params,
                                std::uint64_t seed) {
    const SubstrateNetwork net = generate_substrate(substrate_cfg, seed);
    const auto stream = generate_vnr_stream(stream_cfg, seed);
    return run_simulation_on(net, stream, stream_cfg.horizon, params, seed);
}

}  // namespace vne
