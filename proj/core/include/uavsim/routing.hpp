#pragma once

#include <map>
#include <vector>

#include "uavsim/config.hpp"
#include "uavsim/model.hpp"

namespace uavsim {

// Complete directed graph over the active UAVs. The weight of edge (i, j)
// mixes normalized horizontal distance with the receiver-side load:
//   w(i, j) = alpha * d(i,j)/d_max + (1 - alpha) * load(j)/buffer_relay
struct UavGraph {
    std::vector<int> nodes;       // ascending UAV ids
    std::vector<double> weights;  // n*n row-major by node index
    int root = -1;                // UAV id
    double d_max = 0.0;

    std::size_t size() const { return nodes.size(); }
    int index_of(int uav_id) const;
    double weight(std::size_t from_index, std::size_t to_index) const {
        return weights[from_index * nodes.size() + to_index];
    }
};

struct RoutingTree {
    std::map<int, int> parent;        // uav id -> parent id; root maps to itself
    std::map<int, double> path_cost;  // cumulative weight from the root
};

UavGraph build_graph(const std::vector<UavNode>& uavs, const SimConfig& cfg);

// Shortest-path tree from graph.root. Equal-cost ties prefer the lower
// predecessor id, then the lower node id.
RoutingTree dijkstra_tree(const UavGraph& graph);

struct RelayResult {
    std::map<int, Traffic> relay_dropped;  // per tree node
    Traffic total_dropped = 0;
    Traffic controller_received = 0;
};

// Drains the tree leaves-to-root within one tick. Every hop forwards at most
// buffer_relay; the root's backhaul takes everything it receives. Updates
// relay_buffer_used and load along the way.
RelayResult forward_relay(std::vector<UavNode>& uavs, const RoutingTree& tree,
                          const std::vector<Traffic>& access_intake,
                          const SimConfig& cfg);

struct ElectionResult {
    bool root_changed = false;
    int root_id = -1;
    std::vector<int> released_users;  // users the fresh root stopped serving
    std::vector<int> demoted_uavs;    // timed-out nodes removed this tick
};

// Stamps heartbeats of live UAVs, demotes nodes whose heartbeat age exceeds
// the timeout and, when the root is gone, promotes the live UAV nearest the
// controller (3D distance, ties to the lower id). The promoted UAV releases
// its users; the caller reassigns them.
ElectionResult elect_root(std::vector<UavNode>& uavs, const ControllerPos& controller,
                          int tick, const SimConfig& cfg);

}  // namespace uavsim
