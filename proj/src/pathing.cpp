#include "vne/pathing.hpp"

#include <algorithm>
#include <queue>

namespace vne {

WeightView load_balanced_weights(const SubstrateNetwork& net, double lambda, int min_bw) {
    const auto& links = net.links();
    WeightView view;
    view.weight.resize(links.size());
    view.excluded.resize(links.size());

    double used_sum = 0.0;
    int used_max = 0;
    for (const auto& l : links) {
        used_sum += l.bw_used;
        used_max = std::max(used_max, l.bw_used);
    }
    const double used_mean = links.empty() ? 0.0 : used_sum / static_cast<double>(links.size());

    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& l = links[i];
        double w = l.bw_unit_price;
        if (static_cast<double>(l.bw_used) > used_mean &&
            static_cast<double>(used_max) > used_mean) {
            const double extra =
                (l.bw_used - used_mean) / (static_cast<double>(used_max) - used_mean);
            w = l.bw_unit_price * (1.0 + lambda * extra);
        }
        view.weight[i] = w;
        view.excluded[i] = l.bw_residual < min_bw ? 1 : 0;
    }
    return view;
}

WeightView static_price_weights(const SubstrateNetwork& net) {
    WeightView view;
    view.weight.reserve(net.links().size());
    for (const auto& l : net.links()) view.weight.push_back(l.bw_unit_price);
    view.excluded.assign(net.links().size(), 0);
    return view;
}

double path_weight(const WeightView& view, const std::vector<int>& path) {
    double w = 0.0;
    for (int idx : path) w += view.weight[static_cast<std::size_t>(idx)];
    return w;
}

namespace {

std::vector<int> node_sequence(const std::vector<int>& prev_node, int src, int v) {
    std::vector<int> seq;
    for (int cur = v; cur != -1; cur = prev_node[static_cast<std::size_t>(cur)]) seq.push_back(cur);
    std::reverse(seq.begin(), seq.end());
    (void)src;
    return seq;
}

}  // namespace

std::optional<std::vector<int>> shortest_path(const SubstrateNetwork& net,
                                              const WeightView& view, int src, int dst) {
    const int n = net.node_count();
    std::vector<double> dist(static_cast<std::size_t>(n),
                             std::numeric_limits<double>::infinity());
    std::vector<int> prev_node(static_cast<std::size_t>(n), -1);
    std::vector<int> prev_link(static_cast<std::size_t>(n), -1);
    std::vector<char> done(static_cast<std::size_t>(n), 0);

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[static_cast<std::size_t>(src)] = 0.0;
    heap.push({0.0, src});

    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[static_cast<std::size_t>(u)]) continue;
        done[static_cast<std::size_t>(u)] = 1;
        if (u == dst) break;
        // neighbors are visited in ascending node id; together with the
        // explicit tie comparison below this pins the returned path
        for (const auto& [v, li] : net.adjacency(u)) {
            if (view.excluded[static_cast<std::size_t>(li)]) continue;
            if (done[static_cast<std::size_t>(v)]) continue;
            const double cand = d + view.weight[static_cast<std::size_t>(li)];
            const double cur = dist[static_cast<std::size_t>(v)];
            bool better = cand < cur;
            if (!better && cand == cur) {
                // equal cost: prefer the lexicographically smaller node sequence
                std::vector<int> a = node_sequence(prev_node, src, u);
                a.push_back(v);
                std::vector<int> b = node_sequence(prev_node, src, v);
                better = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
            }
            if (better) {
                dist[static_cast<std::size_t>(v)] = cand;
                prev_node[static_cast<std::size_t>(v)] = u;
                prev_link[static_cast<std::size_t>(v)] = li;
                heap.push({cand, v});
            }
        }
    }

    if (!done[static_cast<std::size_t>(dst)] &&
        dist[static_cast<std::size_t>(dst)] == std::numeric_limits<double>::infinity())
        return std::nullopt;
    std::vector<int> path;
    for (int cur = dst; cur != src; cur = prev_node[static_cast<std::size_t>(cur)])
        path.push_back(prev_link[static_cast<std::size_t>(cur)]);
    std::reverse(path.begin(), path.end());
    return path;
}

DistanceMatrix all_pairs_estimate(const SubstrateNetwork& net, const WeightView& view) {
    const int n = net.node_count();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                DistanceMatrix::infeasible);

    std::vector<double> dist;
    using Entry = std::pair<double, int>;
    for (int s = 0; s < n; ++s) {
        dist.assign(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
        std::vector<char> done(static_cast<std::size_t>(n), 0);
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        dist[static_cast<std::size_t>(s)] = 0.0;
        heap.push({0.0, s});
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (done[static_cast<std::size_t>(u)]) continue;
            done[static_cast<std::size_t>(u)] = 1;
            for (const auto& [v, li] : net.adjacency(u)) {
                if (view.excluded[static_cast<std::size_t>(li)]) continue;
                const double cand = d + view.weight[static_cast<std::size_t>(li)];
                if (cand < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = cand;
                    heap.push({cand, v});
                }
            }
        }
        for (int t = 0; t < n; ++t)
            dm.d[static_cast<std::size_t>(s) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(t)] = dist[static_cast<std::size_t>(t)];
    }
    return dm;
}

}  // namespace vne
