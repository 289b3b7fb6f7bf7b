#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vne/baseline.hpp"
#include "vne/lbhga.hpp"
#include "vne/model.hpp"
#include "vne/topology.hpp"

namespace vne {

enum class Algorithm { lbhga, tga };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct SimParams {
    Algorithm algorithm = Algorithm::lbhga;
    LbhgaParams lbhga;
    TgaParams tga;
    int lbhga_retry_limit = 5;  // ranked individuals tried on link-map failure
    int tga_retry_limit = 1;    // the baseline has no re-mapping step
    double bucket_width = 100.0;
};

// One row per time bucket. Counter-style fields (revenue, cost, accepted,
// refused, runtimes and the ratios derived from them) are cumulative from the
// start of the run; link_load_variance is a snapshot at the bucket boundary.
struct MetricsRecord {
    double bucket_end = 0.0;
    double link_load_variance = 0.0;
    long long revenue = 0;
    long long cost = 0;
    double revenue_cost_ratio = 0.0;
    double acceptance_ratio = 0.0;
    double avg_quotation = 0.0;
    long long accepted = 0;
    long long refused = 0;
    double total_runtime_ms = 0.0;
    double avg_runtime_ms = 0.0;
};

struct SimEvent {
    enum class Kind { accepted, refused, expired };
    Kind kind = Kind::refused;
    double time = 0.0;
    int vnr_id = -1;
    long long revenue = 0;    // accepted events only
    long long cost = 0;       // accepted events only
    long long quotation = 0;  // accepted events only
};

struct SimulationResult {
    std::vector<MetricsRecord> records;
    std::vector<SimEvent> events;
    SubstrateNetwork final_network;
    long long accepted = 0;
    long long refused = 0;
};

// Population variance of per-link consumed bandwidth.
double link_load_variance(const SubstrateNetwork& net);

// Requested resources: sum of cpu and bandwidth demands.
long long revenue_of(const VirtualNetworkRequest& vnr);

// Consumed resources: cpu demands plus bandwidth demand times path hop count.
long long cost_of(const EmbeddingPlan& plan);

// Full arrival/expiry loop over a generated substrate and request stream.
// Arrivals run the selected node-mapping algorithm, then link mapping over the
// ranked individuals up to the retry limit; expiries release. Deterministic
// per (configs, params, seed) except for the wall-clock runtime fields.
SimulationResult run_simulation(const SubstrateConfig& substrate_cfg,
                                const VnrStreamConfig& stream_cfg, const SimParams& params,
                                std::uint64_t seed);

// Same loop over a pre-built substrate and stream (used by replay tooling).
SimulationResult run_simulation_on(const SubstrateNetwork& substrate,
                                   const std::vector<VirtualNetworkRequest>& stream,
                                   double horizon, const SimParams& params,
                                   std::uint64_t seed);

}  // namespace vne
