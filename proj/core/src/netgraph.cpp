#include "qroute/netgraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "qroute/channel.hpp"
#include "qroute/rng.hpp"

namespace qroute {

double euclidean(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

Network::Network(std::vector<Vec2> nodes, std::vector<Edge> edges, double radius)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), radius_(radius) {
    finalize();
}

void Network::finalize() {
    lengths_.resize(edges_.size());
    adjacency_.assign(nodes_.size(), {});
    incident_.assign(nodes_.size(), {});
    for (EdgeId e = 0; e < num_edges(); ++e) {
        Edge& ed = edges_[e];
        if (ed.u > ed.v) std::swap(ed.u, ed.v);
        if (!valid_node(ed.u) || !valid_node(ed.v) || ed.u == ed.v)
            throw std::invalid_argument("Network: bad edge endpoint");
        lengths_[e] = euclidean(nodes_[ed.u], nodes_[ed.v]);
        adjacency_[ed.u].push_back(ed.v);
        adjacency_[ed.v].push_back(ed.u);
        incident_[ed.u].push_back(e);
        incident_[ed.v].push_back(e);
    }
    for (NodeId i = 0; i < num_nodes(); ++i) {
        // keep incident_ aligned with the sorted adjacency
        std::vector<int> order(adjacency_[i].size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return adjacency_[i][a] < adjacency_[i][b];
        });
        std::vector<NodeId> adj(order.size());
        std::vector<EdgeId> inc(order.size());
        for (size_t k = 0; k < order.size(); ++k) {
            adj[k] = adjacency_[i][order[k]];
            inc[k] = incident_[i][order[k]];
        }
        adjacency_[i] = std::move(adj);
        incident_[i] = std::move(inc);
        for (size_t k = 1; k < adjacency_[i].size(); ++k)
            if (adjacency_[i][k] == adjacency_[i][k - 1])
                throw std::invalid_argument("Network: duplicate edge");
    }
}

std::optional<EdgeId> Network::find_edge(NodeId a, NodeId b) const {
    if (!valid_node(a) || !valid_node(b)) return std::nullopt;
    const auto& adj = adjacency_[a];
    const auto it = std::lower_bound(adj.begin(), adj.end(), b);
    if (it == adj.end() || *it != b) return std::nullopt;
    return incident_[a][static_cast<size_t>(it - adj.begin())];
}

EdgeId edge_on(const Network& net, NodeId a, NodeId b) {
    const auto e = net.find_edge(a, b);
    if (!e) throw std::invalid_argument("edge_on: nodes are not adjacent");
    return *e;
}

double Path::total_length(const Network& net) const {
    double sum = 0.0;
    for (EdgeId e : edges) sum += net.length(e);
    return sum;
}

Network generate_rgg(int n_nodes, double radius, std::uint64_t seed) {
    if (n_nodes < 2) throw std::invalid_argument("generate_rgg: n_nodes < 2");
    const double sqrt2 = std::sqrt(2.0);
    if (!(radius > 0.0) || radius > sqrt2 + 1e-12)
        throw std::invalid_argument("generate_rgg: radius outside (0, sqrt(2)]");
    radius = std::min(radius, sqrt2);

    Rng rng(seed);
    std::vector<Vec2> nodes(n_nodes);
    for (auto& p : nodes) {
        p.x = rng.uniform01();
        p.y = rng.uniform01();
    }
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n_nodes; ++i)
        for (NodeId j = i + 1; j < n_nodes; ++j)
            if (euclidean(nodes[i], nodes[j]) <= radius) edges.push_back({i, j});
    return Network(std::move(nodes), std::move(edges), radius);
}

bool is_connected(const Network& net) {
    const int n = net.num_nodes();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::deque<NodeId> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : net.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

namespace {

// BFS shortest path on the residual graph, skipping removed edges. Neighbors
// are scanned in ascending node-id order so the parent assignment (and hence
// the returned path) is deterministic.
std::optional<Path> bfs_shortest_path(const Network& net, NodeId src, NodeId dst,
                                      const std::vector<char>& edge_removed) {
    const int n = net.num_nodes();
    std::vector<NodeId> parent(n, -1);
    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<NodeId> queue{src};
    seen[src] = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        if (u == dst) break;
        const auto& adj = net.neighbors(u);
        for (size_t k = 0; k < adj.size(); ++k) {
            const NodeId v = adj[k];
            const EdgeId e = edge_on(net, u, v);
            if (edge_removed[e] || seen[v]) continue;
            seen[v] = 1;
            parent[v] = u;
            parent_edge[v] = e;
            queue.push_back(v);
        }
    }
    if (!seen[dst]) return std::nullopt;
    Path path;
    for (NodeId v = dst; v != src; v = parent[v]) {
        path.nodes.push_back(v);
        path.edges.push_back(parent_edge[v]);
    }
    path.nodes.push_back(src);
    std::reverse(path.nodes.begin(), path.nodes.end());
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

}  // namespace

PathSet edge_disjoint_paths(const Network& net, NodeId src, NodeId dst,
                            int max_paths) {
    if (!net.valid_node(src) || !net.valid_node(dst))
        throw std::invalid_argument("edge_disjoint_paths: invalid node id");
    if (src == dst)
        throw std::invalid_argument("edge_disjoint_paths: src == dst");
    if (max_paths < 1)
        throw std::invalid_argument("edge_disjoint_paths: max_paths < 1");

    PathSet result;
    result.src = src;
    result.dst = dst;
    std::vector<char> removed(net.num_edges(), 0);
    while (result.count() < max_paths) {
        auto path = bfs_shortest_path(net, src, dst, removed);
        if (!path) break;
        for (EdgeId e : path->edges) removed[e] = 1;
        result.paths.push_back(std::move(*path));
    }
    // Successive BFS yields nondecreasing hop counts already; the sort only
    // settles equal-hop ties (length, then node sequence).
    std::stable_sort(result.paths.begin(), result.paths.end(),
                     [&](const Path& a, const Path& b) {
                         if (a.hops() != b.hops()) return a.hops() < b.hops();
                         const double la = a.total_length(net);
                         const double lb = b.total_length(net);
                         if (la != lb) return la < lb;
                         return a.nodes < b.nodes;
                     });
    return result;
}

Network feasible_subgraph(const Network& net, const CapacityState& caps) {
    if (static_cast<int>(caps.counts.size()) != net.num_edges())
        throw std::invalid_argument("feasible_subgraph: capacity index mismatch");
    std::vector<Edge> kept;
    kept.reserve(net.edges().size());
    for (EdgeId e = 0; e < net.num_edges(); ++e)
        if (caps.counts[e] >= 1) kept.push_back(net.edges()[e]);
    return Network(net.nodes(), std::move(kept), net.radius());
}

std::string network_to_json(const Network& net) {
    nlohmann::json j;
    j["radius"] = net.radius();
    auto& jn = j["nodes"] = nlohmann::json::array();
    for (const auto& p : net.nodes()) jn.push_back({p.x, p.y});
    auto& je = j["edges"] = nlohmann::json::array();
    for (const auto& e : net.edges()) je.push_back({e.u, e.v});
    return j.dump();
}

Network network_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<Vec2> nodes;
    for (const auto& p : j.at("nodes")) nodes.push_back({p.at(0), p.at(1)});
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>()});
    return Network(std::move(nodes), std::move(edges), j.at("radius"));
}

}  // namespace qroute
