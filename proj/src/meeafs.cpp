#include "eafs/meeafs.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "prune_common.hpp"

namespace eafs {

double bridge_weight(const Topology& topology, BridgeId node) {
    return incident_energy(topology, node);
}

RoleAssignment elect_exporters_by_energy(const Topology& topology) {
    std::vector<double> score(static_cast<std::size_t>(topology.node_count()));
    for (BridgeId u = 0; u < topology.node_count(); ++u) {
        score[static_cast<std::size_t>(u)] = incident_energy(topology, u);
    }
    return detail::elect_greedy(topology, score, /*prefer_low=*/true,
                                /*require_unassigned_neighbor=*/false);
}

Mspt reroot_at_neighbor(const Topology& topology, const SptTree& tree, BridgeId new_root,
                        CostMetric metric) {
    const int n = topology.node_count();
    if (new_root < 0 || new_root >= n) {
        throw std::invalid_argument("unknown node " + std::to_string(new_root));
    }
    if (new_root == tree.root ||
        tree.parent[static_cast<std::size_t>(new_root)] != tree.root) {
        throw std::invalid_argument("node " + std::to_string(new_root) +
                                    " is not a direct child of root " +
                                    std::to_string(tree.root) + " in the tree");
    }

    Mspt mspt;
    mspt.importer = new_root;
    mspt.exporter = tree.root;
    SptTree& out = mspt.tree;
    out = tree;
    out.root = new_root;
    out.parent[static_cast<std::size_t>(new_root)] = -1;
    out.parent_arc[static_cast<std::size_t>(new_root)] = -1;
    out.parent[static_cast<std::size_t>(tree.root)] = new_root;
    out.parent_arc[static_cast<std::size_t>(tree.root)] = topology.arc_index(new_root, tree.root);

    // moving the root to a direct child flips exactly one edge, but all
    // tree distances are measured from the new root
    std::vector<std::vector<BridgeId>> children(static_cast<std::size_t>(n));
    for (BridgeId v = 0; v < n; ++v) {
        if (v != new_root) {
            children[static_cast<std::size_t>(out.parent[static_cast<std::size_t>(v)])]
                .push_back(v);
        }
    }
    out.distance[static_cast<std::size_t>(new_root)] = 0.0;
    out.hops[static_cast<std::size_t>(new_root)] = 0;
    std::vector<BridgeId> stack{new_root};
    while (!stack.empty()) {
        const BridgeId u = stack.back();
        stack.pop_back();
        for (BridgeId v : children[static_cast<std::size_t>(u)]) {
            const auto vi = static_cast<std::size_t>(v);
            const Arc& arc = topology.arc(out.parent_arc[vi]);
            out.distance[vi] =
                out.distance[static_cast<std::size_t>(u)] + arc_cost(arc, metric);
            out.hops[vi] = out.hops[static_cast<std::size_t>(u)] + 1;
            stack.push_back(v);
        }
    }
    return mspt;
}

MeeafsPlan plan_meeafs(const Topology& topology, const DemandSet& demands, CostMetric metric) {
    const int n = topology.node_count();

    MeeafsPlan plan;
    plan.baseline_trees.reserve(static_cast<std::size_t>(n));
    for (BridgeId root = 0; root < n; ++root) {
        plan.baseline_trees.push_back(shortest_path_tree(topology, root, metric));
    }
    plan.baseline_loads = route_demands(topology, full_mask(topology), demands, metric);
    plan.roles = elect_exporters_by_energy(topology);

    std::vector<int> collected =
        detail::collect_off_candidates(topology, plan.baseline_trees, plan.roles);

    // the guard runs on the threshold-independent candidate set, so a
    // threshold sweep shrinks the off set monotonically and the residual
    // stays connected for every threshold
    plan.candidate_off = detail::connectivity_guard(topology, std::move(collected));
    return plan;
}

PruneResult apply_threshold(const Topology& topology, const DemandSet& demands,
                            const MeeafsPlan& plan, double threshold, CostMetric metric) {
    if (threshold < 0.0 || threshold > 1.0) {
        throw std::invalid_argument("threshold must be in [0, 1]");
    }
    std::vector<int> off;
    off.reserve(plan.candidate_off.size());
    for (int a : plan.candidate_off) {
        // candidates whose baseline load exceeds the threshold stay on
        if (plan.baseline_loads.load[static_cast<std::size_t>(a)] <=
            threshold * topology.arc(a).capacity) {
            off.push_back(a);
        }
    }
    return detail::finalize_prune(topology, std::move(off), metric, &demands);
}

PruneResult run_meeafs(const Topology& topology, const DemandSet& demands,
                       const MeeafsConfig& config, CostMetric metric) {
    if (!(config.mu > 0.0) || config.mu > 1.0) {
        throw std::invalid_argument("mu must be in (0, 1]");
    }
    const MeeafsPlan plan = plan_meeafs(topology, demands, metric);
    return apply_threshold(topology, demands, plan, config.threshold, metric);
}

}  // namespace eafs
