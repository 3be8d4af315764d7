#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eafs/topology.hpp"

namespace eafs {

// Link cost used by shortest-path computations. `energy` routes on the arc
// energy weights; `hop` treats every arc as cost 1.
enum class CostMetric { energy, hop };

inline double arc_cost(const Arc& arc, CostMetric metric) {
    return metric == CostMetric::energy ? arc.energy : 1.0;
}

const char* cost_metric_name(CostMetric metric);

// Arc subset as a 0/1 mask indexed by arc index.
using ArcMask = std::vector<std::uint8_t>;

ArcMask full_mask(const Topology& topology);

// Shortest-path tree rooted at `root`. Tree arcs are oriented away from the
// root: parent_arc[v] is the arc parent[v] -> v. Ties between equal-distance
// paths are broken by fewer hops, then by smaller parent id, which makes the
// tree a deterministic function of (topology, root, metric).
struct SptTree {
    BridgeId root{};
    std::vector<BridgeId> parent;   // -1 at root
    std::vector<int> parent_arc;    // -1 at root
    std::vector<double> distance;
    std::vector<int> hops;

    // The |N|-1 tree arc indices, ascending.
    std::vector<int> tree_arcs() const;
    // Arc sequence of the tree path root -> target.
    std::vector<int> path_arcs(BridgeId target) const;
};

SptTree shortest_path_tree(const Topology& topology, BridgeId root, CostMetric metric);

// Restricted variant: only arcs with active[arc] != 0 are usable. Throws if
// some node is unreachable, naming it.
SptTree shortest_path_tree(const Topology& topology, BridgeId root, CostMetric metric,
                           const ArcMask& active);

namespace detail {
// Core Dijkstra; unreachable nodes keep infinite distance instead of
// throwing. active == nullptr means the full arc set.
SptTree dijkstra(const Topology& topology, BridgeId root, CostMetric metric,
                 const ArcMask* active);
}  // namespace detail

// Union of shortest-path trees: the active-link set that carries traffic
// when every bridge forwards along its own tree.
struct Spg {
    ArcMask active;                 // arcs in at least one tree
    std::vector<int> contributing;  // number of trees using each arc
    int active_count{0};
};

Spg superpose(const Topology& topology, std::span<const SptTree> trees);

// Minimum number of directed links that keeps every node pair mutually
// reachable: 2 * (|N| - 1), a spanning tree in both directions.
int l_min(const Topology& topology);

// True iff every ordered node pair is connected by a directed path that uses
// only arcs with active[arc] != 0.
bool is_strongly_connected(const Topology& topology, const ArcMask& active);

}  // namespace eafs
