#include "uavsim/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace uavsim {

int UavGraph::index_of(int uav_id) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), uav_id);
    if (it == nodes.end() || *it != uav_id) return -1;
    return static_cast<int>(it - nodes.begin());
}

UavGraph build_graph(const std::vector<UavNode>& uavs, const SimConfig& cfg) {
    UavGraph g;
    for (const auto& u : uavs)
        if (u.active()) g.nodes.push_back(u.id);
    g.root = find_root_id(uavs);
    if (g.root < 0) throw SimError("no root designated");

    const std::size_t n = g.nodes.size();
    g.weights.assign(n * n, 0.0);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = uavs[g.nodes[i]];
            const auto& b = uavs[g.nodes[j]];
            g.d_max = std::max(g.d_max, dist2d(a.x, a.y, b.x, b.y));
        }

    const double alpha = cfg.edge_weight_alpha;
    const double relay_cap = static_cast<double>(cfg.buffer_relay);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& a = uavs[g.nodes[i]];
            const auto& b = uavs[g.nodes[j]];
            const double dist_term =
                g.d_max > 0.0 ? dist2d(a.x, a.y, b.x, b.y) / g.d_max : 0.0;
            const double load_term = static_cast<double>(b.load) / relay_cap;
            g.weights[i * n + j] = alpha * dist_term + (1.0 - alpha) * load_term;
        }
    }
    return g;
}

RoutingTree dijkstra_tree(const UavGraph& graph) {
    const std::size_t n = graph.size();
    const int root_idx = graph.index_of(graph.root);
    if (root_idx < 0) throw SimError("no root designated");

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, kInf);
    std::vector<int> parent(n, -1);
    std::vector<char> done(n, 0);
    dist[root_idx] = 0.0;
    parent[root_idx] = root_idx;

    using Item = std::pair<double, std::size_t>;  // (cost, node index)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    queue.emplace(0.0, static_cast<std::size_t>(root_idx));

    while (!queue.empty()) {
        const auto [cost, u] = queue.top();
        queue.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (v == u || done[v]) continue;
            const double next = dist[u] + graph.weight(u, v);
            if (next < dist[v] ||
                (next == dist[v] && graph.nodes[u] < graph.nodes[parent[v]])) {
                dist[v] = next;
                parent[v] = static_cast<int>(u);
                queue.emplace(next, v);
            }
        }
    }

    RoutingTree tree;
    for (std::size_t i = 0; i < n; ++i) {
        if (!done[i]) throw SimError("unreachable node");
        tree.parent[graph.nodes[i]] = graph.nodes[parent[i]];
        tree.path_cost[graph.nodes[i]] = dist[i];
    }
    return tree;
}

RelayResult forward_relay(std::vector<UavNode>& uavs, const RoutingTree& tree,
                          const std::vector<Traffic>& access_intake,
                          const SimConfig& cfg) {
    RelayResult res;

    // Depth of every node, then drain deepest-first so one pass reaches root.
    std::map<int, int> depth;
    for (const auto& [id, p] : tree.parent) {
        int d = 0;
        for (int v = id; tree.parent.at(v) != v; v = tree.parent.at(v)) ++d;
        depth[id] = d;
    }
    std::vector<int> order;
    order.reserve(depth.size());
    for (const auto& [id, d] : depth) order.push_back(id);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (depth[a] != depth[b]) return depth[a] > depth[b];
        return a < b;
    });

    std::map<int, Traffic> inflow;
    for (int id : order) inflow[id] += access_intake[id];

    int root = -1;
    for (int id : order) {
        const int p = tree.parent.at(id);
        if (p == id) {
            root = id;
            continue;
        }
        const Traffic out = std::min(inflow[id], cfg.buffer_relay);
        const Traffic drop = inflow[id] - out;
        res.relay_dropped[id] = drop;
        res.total_dropped += drop;
        inflow[p] += out;
        uavs[id].relay_buffer_used = out;
        uavs[id].load = out;
    }

    if (root >= 0) {
        // The root's backhaul drains instantly; nothing is buffered or dropped.
        res.controller_received = inflow[root];
        res.relay_dropped[root] = 0;
        uavs[root].relay_buffer_used = 0;
        uavs[root].load = inflow[root];
    }
    return res;
}

ElectionResult elect_root(std::vector<UavNode>& uavs, const ControllerPos& controller,
                          int tick, const SimConfig& cfg) {
    ElectionResult res;

    bool any_live = false;
    for (const auto& u : uavs)
        if (u.active() && !u.failed) any_live = true;
    if (!any_live) throw SimError("no live UAV");

    for (auto& u : uavs)
        if (u.active() && !u.failed) u.last_heartbeat = tick;

    bool root_lost = false;
    for (auto& u : uavs) {
        if (!u.active()) continue;
        if (tick - u.last_heartbeat > cfg.heartbeat_timeout) {
            if (u.role == UavRole::Root) root_lost = true;
            u.role = UavRole::Suspended;
            res.demoted_uavs.push_back(u.id);
        }
    }

    int root_id = find_root_id(uavs);
    if (root_id < 0 || root_lost) {
        // Closest live UAV to the controller takes over; ties to the lower id.
        int best = -1;
        double best_dist = 0.0;
        for (const auto& u : uavs) {
            if (!u.active() || u.role != UavRole::Serving || u.failed) continue;
            const double d = dist3d_ground_to_uav(controller.xb, controller.yb, u);
            if (best < 0 || d < best_dist) {
                best = u.id;
                best_dist = d;
            }
        }
        if (best < 0) throw SimError("no live UAV");
        auto& u = uavs[best];
        u.role = UavRole::Root;
        u.sector_id = -1;
        u.parked = false;
        u.idle_ticks = 0;
        res.released_users = u.served_users;
        u.served_users.clear();
        res.root_changed = true;
        root_id = best;
    }
    res.root_id = root_id;
    return res;
}

}  // namespace uavsim
