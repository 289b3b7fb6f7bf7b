#include "vne/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vne {

int VirtualNetworkRequest::min_bw_demand() const {
    int m = 0;
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (i == 0 || links[i].bw_demand < m) m = links[i].bw_demand;
    }
    return m;
}

long long VirtualNetworkRequest::total_demand() const {
    long long sum = 0;
    for (const auto& n : nodes) sum += n.cpu_demand;
    for (const auto& l : links) sum += l.bw_demand;
    return sum;
}

bool VirtualNetworkRequest::connected() const {
    if (nodes.empty()) return true;
    std::map<int, std::vector<int>> adj;
    for (const auto& n : nodes) adj[n.id];
    for (const auto& l : links) {
        adj[l.a].push_back(l.b);
        adj[l.b].push_back(l.a);
    }
    std::set<int> seen;
    std::vector<int> stack{nodes.front().id};
    seen.insert(nodes.front().id);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
            if (seen.insert(v).second) stack.push_back(v);
        }
    }
    return seen.size() == nodes.size();
}

int SubstrateNetwork::add_node(int domain, int cpu_capacity, int cpu_unit_price) {
    SubstrateNode n;
    n.id = static_cast<int>(nodes_.size());
    n.domain = domain;
    n.cpu_capacity = cpu_capacity;
    n.cpu_residual = cpu_capacity;
    n.cpu_unit_price = cpu_unit_price;
    nodes_.push_back(n);
    adjacency_.emplace_back();
    return n.id;
}

int SubstrateNetwork::add_link(int a, int b, int bw_capacity, int bw_unit_price,
                               bool inter_domain) {
    if (a == b) throw std::invalid_argument("self-loop link");
    if (a > b) std::swap(a, b);
    if (link_index_.count({a, b})) throw std::invalid_argument("duplicate link");
    SubstrateLink l;
    l.a = a;
    l.b = b;
    l.bw_capacity = bw_capacity;
    l.bw_residual = bw_capacity;
    l.bw_unit_price = bw_unit_price;
    l.bw_used = 0;
    l.inter_domain = inter_domain;
    int idx = static_cast<int>(links_.size());
    links_.push_back(l);
    link_index_[{a, b}] = idx;
    auto insert_sorted = [](std::vector<std::pair<int, int>>& v, std::pair<int, int> p) {
        v.insert(std::upper_bound(v.begin(), v.end(), p), p);
    };
    insert_sorted(adjacency_[static_cast<std::size_t>(a)], {b, idx});
    insert_sorted(adjacency_[static_cast<std::size_t>(b)], {a, idx});
    return idx;
}

int SubstrateNetwork::find_link(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = link_index_.find({a, b});
    return it == link_index_.end() ? -1 : it->second;
}

bool SubstrateNetwork::is_connected() const {
    if (nodes_.empty()) return true;
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [v, li] : adjacency(u)) {
            (void)li;
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == nodes_.size();
}

int SubstrateNetwork::max_unit_price() const {
    int m = 1;
    for (const auto& n : nodes_) m = std::max(m, n.cpu_unit_price);
    for (const auto& l : links_) m = std::max(m, l.bw_unit_price);
    return m;
}

void SubstrateNetwork::consume_bandwidth(int link_idx, int amount) {
    auto& l = links_[static_cast<std::size_t>(link_idx)];
    if (l.bw_residual < amount)
        throw InsufficientBandwidth(l.a, l.b, "insufficient bandwidth on link (" +
                                                  std::to_string(l.a) + "," +
                                                  std::to_string(l.b) + ")");
    l.bw_residual -= amount;
    l.bw_used += amount;
}

void SubstrateNetwork::restore_bandwidth(int link_idx, int amount) {
    auto& l = links_[static_cast<std::size_t>(link_idx)];
    l.bw_residual += amount;
    l.bw_used -= amount;
}

void SubstrateNetwork::consume_cpu(int node_id, int amount) {
    auto& n = nodes_[static_cast<std::size_t>(node_id)];
    if (n.cpu_residual < amount)
        throw InsufficientCpu(node_id,
                              "insufficient cpu on node " + std::to_string(node_id));
    n.cpu_residual -= amount;
}

void validate_plan_structure(const SubstrateNetwork& net, const EmbeddingPlan& plan) {
    if (plan.node_map.size() != plan.node_cpu_demands.size() ||
        plan.link_paths.size() != plan.link_bw_demands.size())
        throw std::invalid_argument("plan demand vectors out of sync");
    std::set<int> hosts;
    for (int s : plan.node_map) {
        if (s < 0 || s >= net.node_count())
            throw std::invalid_argument("plan references unknown substrate node");
        if (!hosts.insert(s).second)
            throw std::invalid_argument("plan node map is not injective");
    }
    if (plan.link_ends.size() != plan.link_paths.size())
        throw std::invalid_argument("plan endpoint list out of sync");
    for (std::size_t j = 0; j < plan.link_paths.size(); ++j) {
        const auto& path = plan.link_paths[j];
        if (path.empty()) throw std::invalid_argument("plan contains an empty path");
        for (int idx : path) {
            if (idx < 0 || idx >= net.link_count())
                throw std::invalid_argument("plan references unknown substrate link");
        }
        int cur = plan.node_map[static_cast<std::size_t>(plan.link_ends[j].first)];
        int goal = plan.node_map[static_cast<std::size_t>(plan.link_ends[j].second)];
        std::set<int> visited{cur};
        for (int idx : path) {
            const auto& l = net.link(idx);
            if (!l.touches(cur))
                throw std::invalid_argument("plan path does not start or continue at the mapped endpoint");
            cur = l.other(cur);
            if (!visited.insert(cur).second)
                throw std::invalid_argument("plan path is not simple");
        }
        if (cur != goal)
            throw std::invalid_argument("plan path does not end at the mapped endpoint");
    }
}

void allocate(SubstrateNetwork& net, const EmbeddingPlan& plan) {
    if (net.active_.count(plan.vnr_id))
        throw std::invalid_argument("plan " + std::to_string(plan.vnr_id) +
                                    " is already allocated");
    // feasibility pass; nothing is touched until every constraint holds
    for (std::size_t i = 0; i < plan.node_map.size(); ++i) {
        const auto& n = net.node(plan.node_map[i]);
        if (n.cpu_residual < plan.node_cpu_demands[i])
            throw InsufficientCpu(n.id, "insufficient cpu on node " + std::to_string(n.id));
    }
    std::map<int, int> demand_per_link;
    for (std::size_t j = 0; j < plan.link_paths.size(); ++j) {
        for (int idx : plan.link_paths[j]) demand_per_link[idx] += plan.link_bw_demands[j];
    }
    for (const auto& [idx, d] : demand_per_link) {
        const auto& l = net.link(idx);
        if (l.bw_residual < d)
            throw InsufficientBandwidth(l.a, l.b, "insufficient bandwidth on link (" +
                                                      std::to_string(l.a) + "," +
                                                      std::to_string(l.b) + ")");
    }
    for (std::size_t i = 0; i < plan.node_map.size(); ++i) {
        auto& n = net.nodes_[static_cast<std::size_t>(plan.node_map[i])];
        n.cpu_residual -= plan.node_cpu_demands[i];
    }
    for (const auto& [idx, d] : demand_per_link) {
        auto& l = net.links_[static_cast<std::size_t>(idx)];
        l.bw_residual -= d;
        l.bw_used += d;
    }
    net.active_.emplace(plan.vnr_id, plan);
}

void release(SubstrateNetwork& net, int vnr_id) {
    auto it = net.active_.find(vnr_id);
    if (it == net.active_.end())
        throw UnknownPlan(vnr_id, "plan " + std::to_string(vnr_id) + " is not active");
    const EmbeddingPlan& plan = it->second;
    for (std::size_t i = 0; i < plan.node_map.size(); ++i) {
        auto& n = net.nodes_[static_cast<std::size_t>(plan.node_map[i])];
        n.cpu_residual += plan.node_cpu_demands[i];
    }
    std::map<int, int> demand_per_link;
    for (std::size_t j = 0; j < plan.link_paths.size(); ++j) {
        for (int idx : plan.link_paths[j]) demand_per_link[idx] += plan.link_bw_demands[j];
    }
    for (const auto& [idx, d] : demand_per_link) {
        auto& l = net.links_[static_cast<std::size_t>(idx)];
        l.bw_residual += d;
        l.bw_used -= d;
    }
    net.active_.erase(it);
}

void release(SubstrateNetwork& net, const EmbeddingPlan& plan) { release(net, plan.vnr_id); }

long long objective_value(const SubstrateNetwork& net, const EmbeddingPlan& plan) {
    long long total = 0;
    for (std::size_t i = 0; i < plan.node_map.size(); ++i)
        total += static_cast<long long>(plan.node_cpu_demands[i]) *
                 net.node(plan.node_map[i]).cpu_unit_price;
    for (std::size_t j = 0; j < plan.link_paths.size(); ++j) {
        long long aggregate_price = 0;
        for (int idx : plan.link_paths[j]) aggregate_price += net.link(idx).bw_unit_price;
        total += static_cast<long long>(plan.link_bw_demands[j]) * aggregate_price;
    }
    return total;
}

bool ledger_consistent(const SubstrateNetwork& net) {
    std::vector<long long> cpu_use(static_cast<std::size_t>(net.node_count()), 0);
    std::vector<long long> bw_use(static_cast<std::size_t>(net.link_count()), 0);
    for (const auto& [id, plan] : net.active_plans()) {
        (void)id;
        for (std::size_t i = 0; i < plan.node_map.size(); ++i)
            cpu_use[static_cast<std::size_t>(plan.node_map[i])] += plan.node_cpu_demands[i];
        for (std::size_t j = 0; j < plan.link_paths.size(); ++j)
            for (int idx : plan.link_paths[j])
                bw_use[static_cast<std::size_t>(idx)] += plan.link_bw_demands[j];
    }
    for (const auto& n : net.nodes()) {
        if (n.cpu_capacity - n.cpu_residual != cpu_use[static_cast<std::size_t>(n.id)])
            return false;
        if (n.cpu_residual < 0 || n.cpu_residual > n.cpu_capacity) return false;
    }
    for (int i = 0; i < net.link_count(); ++i) {
        const auto& l = net.link(i);
        if (l.bw_used + l.bw_residual != l.bw_capacity) return false;
        if (l.bw_used != bw_use[static_cast<std::size_t>(i)]) return false;
        if (l.bw_residual < 0 || l.bw_residual > l.bw_capacity) return false;
    }
    return true;
}

}  // namespace vne
