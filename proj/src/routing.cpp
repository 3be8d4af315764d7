#include "eafs/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "eafs/error.hpp"

namespace eafs {

const char* cost_metric_name(CostMetric metric) {
    return metric == CostMetric::energy ? "energy" : "hop";
}

ArcMask full_mask(const Topology& topology) {
    return ArcMask(static_cast<std::size_t>(topology.arc_count()), 1);
}

std::vector<int> SptTree::tree_arcs() const {
    std::vector<int> arcs;
    arcs.reserve(parent_arc.size() - 1);
    for (std::size_t v = 0; v < parent_arc.size(); ++v) {
        if (static_cast<BridgeId>(v) != root) arcs.push_back(parent_arc[v]);
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

std::vector<int> SptTree::path_arcs(BridgeId target) const {
    std::vector<int> path;
    BridgeId v = target;
    while (v != root) {
        path.push_back(parent_arc[static_cast<std::size_t>(v)]);
        v = parent[static_cast<std::size_t>(v)];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace detail {

// Dijkstra over the lexicographic key (distance, hops). Edge costs are
// strictly positive, so the composite key strictly increases along arcs and
// every optimal parent of a node is finalized before the node itself; the
// smaller-id parent then wins exact key ties without re-queueing.
SptTree dijkstra(const Topology& topology, BridgeId root, CostMetric metric,
                 const ArcMask* active) {
    const std::size_t n = static_cast<std::size_t>(topology.node_count());
    if (root < 0 || static_cast<std::size_t>(root) >= n) {
        throw std::invalid_argument("unknown root node " + std::to_string(root));
    }
    SptTree tree;
    tree.root = root;
    tree.parent.assign(n, -1);
    tree.parent_arc.assign(n, -1);
    tree.distance.assign(n, std::numeric_limits<double>::infinity());
    tree.hops.assign(n, std::numeric_limits<int>::max());

    using Entry = std::tuple<double, int, BridgeId>;  // (distance, hops, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    tree.distance[static_cast<std::size_t>(root)] = 0.0;
    tree.hops[static_cast<std::size_t>(root)] = 0;
    queue.emplace(0.0, 0, root);

    std::vector<std::uint8_t> done(n, 0);
    while (!queue.empty()) {
        const auto [dist, hops, u] = queue.top();
        queue.pop();
        if (done[static_cast<std::size_t>(u)]) continue;
        done[static_cast<std::size_t>(u)] = 1;
        const auto [lo, hi] = topology.out_arc_range(u);
        for (int a = lo; a < hi; ++a) {
            if (active && !(*active)[static_cast<std::size_t>(a)]) continue;
            const Arc& arc = topology.arc(a);
            const auto v = static_cast<std::size_t>(arc.to);
            const double cand_dist = dist + arc_cost(arc, metric);
            const int cand_hops = hops + 1;
            if (cand_dist < tree.distance[v] ||
                (cand_dist == tree.distance[v] && cand_hops < tree.hops[v])) {
                tree.distance[v] = cand_dist;
                tree.hops[v] = cand_hops;
                tree.parent[v] = u;
                tree.parent_arc[v] = a;
                queue.emplace(cand_dist, cand_hops, arc.to);
            } else if (cand_dist == tree.distance[v] && cand_hops == tree.hops[v] &&
                       u < tree.parent[v]) {
                tree.parent[v] = u;
                tree.parent_arc[v] = a;
            }
        }
    }

    return tree;
}

}  // namespace detail

namespace {

SptTree complete_tree(SptTree tree) {
    for (std::size_t v = 0; v < tree.parent.size(); ++v) {
        if (tree.distance[v] == std::numeric_limits<double>::infinity()) {
            throw DataError("node " + std::to_string(v) + " is unreachable from root " +
                            std::to_string(tree.root) + " within the active arc set");
        }
    }
    return tree;
}

}  // namespace

SptTree shortest_path_tree(const Topology& topology, BridgeId root, CostMetric metric) {
    return complete_tree(detail::dijkstra(topology, root, metric, nullptr));
}

SptTree shortest_path_tree(const Topology& topology, BridgeId root, CostMetric metric,
                           const ArcMask& active) {
    return complete_tree(detail::dijkstra(topology, root, metric, &active));
}

Spg superpose(const Topology& topology, std::span<const SptTree> trees) {
    Spg spg;
    const std::size_t m = static_cast<std::size_t>(topology.arc_count());
    spg.active.assign(m, 0);
    spg.contributing.assign(m, 0);
    for (const SptTree& t : trees) {
        if (t.parent.size() != static_cast<std::size_t>(topology.node_count())) {
            throw std::invalid_argument("tree does not match the topology");
        }
        for (std::size_t v = 0; v < t.parent_arc.size(); ++v) {
            if (static_cast<BridgeId>(v) == t.root) continue;
            const auto a = static_cast<std::size_t>(t.parent_arc[v]);
            if (++spg.contributing[a] == 1) {
                spg.active[a] = 1;
                ++spg.active_count;
            }
        }
    }
    return spg;
}

int l_min(const Topology& topology) { return 2 * (topology.node_count() - 1); }

bool is_strongly_connected(const Topology& topology, const ArcMask& active) {
    const std::size_t n = static_cast<std::size_t>(topology.node_count());
    if (active.size() != static_cast<std::size_t>(topology.arc_count())) {
        throw std::invalid_argument("arc mask does not match the topology");
    }
    // strongly connected iff node 0 reaches everyone and everyone reaches 0
    std::vector<std::uint8_t> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const auto [lo, hi] = topology.out_arc_range(u);
        for (int a = lo; a < hi; ++a) {
            if (!active[static_cast<std::size_t>(a)]) continue;
            const auto v = static_cast<std::size_t>(topology.arc(a).to);
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(static_cast<int>(v));
            }
        }
    }
    if (count != n) return false;

    std::fill(seen.begin(), seen.end(), 0);
    queue.assign({0});
    seen[0] = 1;
    count = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int a : topology.in_arcs(u)) {
            if (!active[static_cast<std::size_t>(a)]) continue;
            const auto v = static_cast<std::size_t>(topology.arc(a).from);
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(static_cast<int>(v));
            }
        }
    }
    return count == n;
}

}  // namespace eafs
