#include "eafs/ear.hpp"

#include <vector>

#include "prune_common.hpp"

namespace eafs {

RoleAssignment elect_exporters_by_degree(const Topology& topology) {
    std::vector<double> score(static_cast<std::size_t>(topology.node_count()));
    for (BridgeId u = 0; u < topology.node_count(); ++u) {
        score[static_cast<std::size_t>(u)] = static_cast<double>(topology.degree(u));
    }
    return detail::elect_greedy(topology, score, /*prefer_low=*/false,
                                /*require_unassigned_neighbor=*/true);
}

PruneResult run_ear(const Topology& topology, CostMetric metric) {
    const int n = topology.node_count();

    std::vector<SptTree> trees;
    trees.reserve(static_cast<std::size_t>(n));
    for (BridgeId root = 0; root < n; ++root) {
        trees.push_back(shortest_path_tree(topology, root, metric));
    }
    const RoleAssignment roles = elect_exporters_by_degree(topology);
    std::vector<int> candidates = detail::collect_off_candidates(topology, trees, roles);
    std::vector<int> off = detail::connectivity_guard(topology, std::move(candidates));
    return detail::finalize_prune(topology, std::move(off), metric, nullptr);
}

}  // namespace eafs
