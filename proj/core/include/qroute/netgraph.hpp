#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qroute {

struct CapacityState;  // channel.hpp

using NodeId = int;
using EdgeId = int;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

double euclidean(const Vec2& a, const Vec2& b);

// Undirected edge between node ids; stored with u < v.
struct Edge {
    NodeId u = -1;
    NodeId v = -1;
    bool operator==(const Edge&) const = default;
};

// Static topology: node positions on the unit square plus the radius-induced
// edge set. Immutable after construction; adjacency and the (u,v) -> edge id
// index are built once by finalize().
class Network {
  public:
    Network() = default;
    Network(std::vector<Vec2> nodes, std::vector<Edge> edges, double radius);

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    double radius() const { return radius_; }

    const std::vector<Vec2>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<double>& lengths() const { return lengths_; }

    const Vec2& position(NodeId i) const { return nodes_[i]; }
    double length(EdgeId e) const { return lengths_[e]; }

    // Neighbors of i in ascending node-id order.
    const std::vector<NodeId>& neighbors(NodeId i) const { return adjacency_[i]; }

    std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

    bool valid_node(NodeId i) const { return i >= 0 && i < num_nodes(); }

  private:
    std::vector<Vec2> nodes_;
    std::vector<Edge> edges_;
    std::vector<double> lengths_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::vector<EdgeId>> incident_;  // aligned with adjacency_
    double radius_ = 0.0;

    void finalize();

    friend EdgeId edge_on(const Network& net, NodeId a, NodeId b);
};

// Loop-free route; edges[k] joins nodes[k] and nodes[k+1].
struct Path {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
    int hops() const { return static_cast<int>(edges.size()); }
    double total_length(const Network& net) const;
};

// Edge-disjoint paths for one S-D pair, sorted by nondecreasing hop count
// (ties: smaller total length, then lexicographic node sequence).
struct PathSet {
    NodeId src = -1;
    NodeId dst = -1;
    std::vector<Path> paths;
    int count() const { return static_cast<int>(paths.size()); }
    bool empty() const { return paths.empty(); }
};

// Uniform node placement on [0,1]^2; an edge joins every pair within
// `radius`. Deterministic for a fixed seed.
Network generate_rgg(int n_nodes, double radius, std::uint64_t seed);

// True iff one component spans all nodes (BFS from node 0).
bool is_connected(const Network& net);

// Greedy successive-shortest-paths: repeat BFS on the residual graph,
// removing each found path's edges, until no route or max_paths is reached.
// May find fewer paths than a max-flow decomposition. Empty PathSet when the
// endpoints are disconnected.
PathSet edge_disjoint_paths(const Network& net, NodeId src, NodeId dst,
                            int max_paths);

// Same node set, keeping exactly the edges with remaining capacity >= 1.
Network feasible_subgraph(const Network& net, const CapacityState& caps);

// JSON fixture format: {"nodes":[[x,y],...], "edges":[[i,j],...], "radius":r}.
// Lengths are recomputed from positions on load.
std::string network_to_json(const Network& net);
Network network_from_json(const std::string& text);

}  // namespace qroute
