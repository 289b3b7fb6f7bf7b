#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vne {

struct SubstrateNode {
    int id = 0;
    int domain = 0;
    int cpu_capacity = 0;
    int cpu_residual = 0;
    int cpu_unit_price = 1;
};

struct SubstrateLink {
    int a = 0, b = 0;  // endpoint node ids, a < b
    int bw_capacity = 0;
    int bw_residual = 0;
    int bw_unit_price = 1;
    int bw_used = 0;  // always bw_capacity - bw_residual
    bool inter_domain = false;

    int other(int node) const { return node == a ? b : a; }
    bool touches(int node) const { return node == a || node == b; }
};

struct VirtualNode {
    int id = 0;
    int cpu_demand = 1;
};

struct VirtualLink {
    int a = 0, b = 0;  // virtual node ids
    int bw_demand = 1;
};

struct VirtualNetworkRequest {
    int id = 0;
    double arrival_time = 0.0;
    double lifetime = 0.0;
    std::vector<VirtualNode> nodes;
    std::vector<VirtualLink> links;

    // Smallest bandwidth demand over the request's links; 0 for a linkless request.
    int min_bw_demand() const;
    long long total_demand() const;  // sum of cpu and bandwidth demands
    bool connected() const;
};

// A complete embedding of one request: host node per virtual node plus a
// substrate path (as link indices) per virtual link. Carries its demands so
// the ledger can release it without the originating request.
struct EmbeddingPlan {
    int vnr_id = -1;
    std::vector<int> node_map;                  // virtual node index -> substrate node id
    std::vector<int> node_cpu_demands;          // parallel to node_map
    std::vector<std::vector<int>> link_paths;   // virtual link index -> substrate link indices
    std::vector<int> link_bw_demands;           // parallel to link_paths
    std::vector<std::pair<int, int>> link_ends; // virtual node index pair per virtual link
    long long objective = 0;
};

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientCpu : public ModelError {
public:
    int node_id;
    InsufficientCpu(int node, const std::string& what) : ModelError(what), node_id(node) {}
};

class InsufficientBandwidth : public ModelError {
public:
    int link_a, link_b;
    InsufficientBandwidth(int a, int b, const std::string& what)
        : ModelError(what), link_a(a), link_b(b) {}
};

class UnknownPlan : public ModelError {
public:
    int vnr_id;
    UnknownPlan(int id, const std::string& what) : ModelError(what), vnr_id(id) {}
};

// Multi-domain substrate graph with a residual-resource ledger. Allocation and
// release are the only mutating entry points after construction; both keep the
// active-plan registry in sync so any allocate/release sequence that drains the
// registry restores the initial state exactly.
class SubstrateNetwork {
public:
    int add_node(int domain, int cpu_capacity, int cpu_unit_price);
    int add_link(int a, int b, int bw_capacity, int bw_unit_price, bool inter_domain);

    const std::vector<SubstrateNode>& nodes() const { return nodes_; }
    const std::vector<SubstrateLink>& links() const { return links_; }
    const SubstrateNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    const SubstrateLink& link(int idx) const { return links_[static_cast<std::size_t>(idx)]; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int link_count() const { return static_cast<int>(links_.size()); }

    int domain_count() const { return domain_count_; }
    void set_domain_count(int d) { domain_count_ = d; }

    // Link index for an endpoint pair, -1 if absent.
    int find_link(int a, int b) const;
    // (neighbor node id, link index) pairs, sorted by neighbor id.
    const std::vector<std::pair<int, int>>& adjacency(int node) const {
        return adjacency_[static_cast<std::size_t>(node)];
    }

    bool is_connected() const;
    int max_unit_price() const;

    const std::map<int, EmbeddingPlan>& active_plans() const { return active_; }

    // Scratch mutation used by link mapping for tentative, additive
    // consumption. Throws InsufficientBandwidth and changes nothing on failure.
    void consume_bandwidth(int link_idx, int amount);
    void restore_bandwidth(int link_idx, int amount);
    void consume_cpu(int node_id, int amount);

    friend void allocate(SubstrateNetwork& net, const EmbeddingPlan& plan);
    friend void release(SubstrateNetwork& net, int vnr_id);

private:
    std::vector<SubstrateNode> nodes_;
    std::vector<SubstrateLink> links_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    std::map<std::pair<int, int>, int> link_index_;
    std::map<int, EmbeddingPlan> active_;
    int domain_count_ = 1;
};

// Atomically applies a plan: on any constraint violation the network is left
// untouched and the violating element is named in the thrown error.
void allocate(SubstrateNetwork& net, const EmbeddingPlan& plan);

// Exact inverse of allocate for a plan in the active ledger.
void release(SubstrateNetwork& net, int vnr_id);
void release(SubstrateNetwork& net, const EmbeddingPlan& plan);

// Total price of a plan: cpu demand times host unit price per virtual node,
// plus bandwidth demand times the aggregate unit price of the mapped path per
// virtual link. Pure function.
long long objective_value(const SubstrateNetwork& net, const EmbeddingPlan& plan);

// Structural validity: node_map injective, every path simple with endpoints
// matching the mapped virtual link. Throws std::invalid_argument on violation.
void validate_plan_structure(const SubstrateNetwork& net, const EmbeddingPlan& plan);

// Ledger audit: residuals of every node and link equal capacity minus the sum
// of demands of active plans. Used by tests and simulation assertions.
bool ledger_consistent(const SubstrateNetwork& net);

}  // namespace vne
