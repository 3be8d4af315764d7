#pragma once

// Shared test fixtures and independent oracles. Everything here is
// deliberately brute-force and separate from the library's algorithms.

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>
#include <vector>

#include "eafs/routing.hpp"
#include "eafs/topology.hpp"

namespace test {

struct Edge {
    int a;
    int b;
    double energy;
};

// Symmetric topology: each physical edge becomes two arcs of equal energy.
inline eafs::Topology make_topology(int nodes, const std::vector<Edge>& edges,
                                    double capacity = 1.0) {
    std::vector<eafs::Arc> arcs;
    arcs.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        arcs.push_back(eafs::Arc{e.a, e.b, e.energy, capacity});
        arcs.push_back(eafs::Arc{e.b, e.a, e.energy, capacity});
    }
    return eafs::Topology(nodes, std::move(arcs));
}

// 0 -- 1 with energy 0.3 both ways: the smallest legal topology.
inline eafs::Topology two_node() { return make_topology(2, {{0, 1, 0.3}}); }

// Triangle with a costly direct 0--2 link; shortest 0->2 path is 0-1-2.
inline eafs::Topology triangle() {
    return make_topology(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
}

// Five-node full mesh whose two lightest bridges are 0 (weight 1.4) and
// 1 (weight 1.5); the worked example for the energy-based election.
inline eafs::Topology five_node_mesh() {
    return make_topology(5, {
                                {0, 1, 0.3},
                                {0, 2, 0.4},
                                {0, 3, 0.3},
                                {0, 4, 0.4},
                                {1, 2, 0.3},
                                {1, 3, 0.4},
                                {1, 4, 0.5},
                                {2, 3, 0.5},
                                {2, 4, 0.5},
                                {3, 4, 0.5},
                            });
}

// Center 0 with leaves 1..4.
inline eafs::Topology star5() {
    return make_topology(5, {{0, 1, 0.2}, {0, 2, 0.2}, {0, 3, 0.2}, {0, 4, 0.2}});
}

// Exhaustive minimum over all simple paths, lexicographic on
// (cost, hops) with costs accumulated head-to-tail exactly like Dijkstra.
struct PathOracle {
    double distance = std::numeric_limits<double>::infinity();
    int hops = std::numeric_limits<int>::max();
};

inline void oracle_dfs(const eafs::Topology& topo, const eafs::ArcMask* active, int node,
                       int target, double cost, int hops, std::vector<char>& visited,
                       PathOracle& best, eafs::CostMetric metric) {
    if (node == target) {
        if (cost < best.distance || (cost == best.distance && hops < best.hops)) {
            best.distance = cost;
            best.hops = hops;
        }
        return;
    }
    const auto [lo, hi] = topo.out_arc_range(node);
    for (int a = lo; a < hi; ++a) {
        if (active && !(*active)[static_cast<std::size_t>(a)]) continue;
        const eafs::Arc& arc = topo.arc(a);
        if (visited[static_cast<std::size_t>(arc.to)]) continue;
        visited[static_cast<std::size_t>(arc.to)] = 1;
        oracle_dfs(topo, active, arc.to, target, cost + eafs::arc_cost(arc, metric), hops + 1,
                   visited, best, metric);
        visited[static_cast<std::size_t>(arc.to)] = 0;
    }
}

inline PathOracle best_simple_path(const eafs::Topology& topo, int source, int target,
                                   eafs::CostMetric metric,
                                   const eafs::ArcMask* active = nullptr) {
    PathOracle best;
    std::vector<char> visited(static_cast<std::size_t>(topo.node_count()), 0);
    visited[static_cast<std::size_t>(source)] = 1;
    oracle_dfs(topo, active, source, target, 0.0, 0, visited, best, metric);
    return best;
}

// Breadth-first reachability count from `start` over active out-arcs.
inline int bfs_reach_count(const eafs::Topology& topo, int start,
                           const eafs::ArcMask* active = nullptr) {
    std::vector<char> seen(static_cast<std::size_t>(topo.node_count()), 0);
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const auto [lo, hi] = topo.out_arc_range(u);
        for (int a = lo; a < hi; ++a) {
            if (active && !(*active)[static_cast<std::size_t>(a)]) continue;
            const int v = topo.arc(a).to;
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                queue.push_back(v);
            }
        }
    }
    return count;
}

// Independent strong-connectivity oracle: BFS from every node.
inline bool strongly_connected_oracle(const eafs::Topology& topo, const eafs::ArcMask& active) {
    for (int s = 0; s < topo.node_count(); ++s) {
        if (bfs_reach_count(topo, s, &active) != topo.node_count()) return false;
    }
    return true;
}

}  // namespace test
