#include "prune_common.hpp"

#include <algorithm>

namespace eafs::detail {

RoleAssignment elect_greedy(const Topology& topology, const std::vector<double>& score,
                            bool prefer_low, bool require_unassigned_neighbor) {
    const int n = topology.node_count();
    constexpr int kUnassigned = -1;
    std::vector<int> state(static_cast<std::size_t>(n), kUnassigned);
    std::vector<BridgeId> exporter_of(static_cast<std::size_t>(n), -1);

    auto has_unassigned_neighbor = [&](BridgeId u) {
        const auto [lo, hi] = topology.out_arc_range(u);
        for (int a = lo; a < hi; ++a) {
            if (state[static_cast<std::size_t>(topology.arc(a).to)] == kUnassigned) return true;
        }
        return false;
    };

    for (;;) {
        BridgeId best = -1;
        for (BridgeId u = 0; u < n; ++u) {
            if (state[static_cast<std::size_t>(u)] != kUnassigned) continue;
            if (require_unassigned_neighbor && !has_unassigned_neighbor(u)) continue;
            if (best < 0) {
                best = u;
                continue;
            }
            const double su = score[static_cast<std::size_t>(u)];
            const double sb = score[static_cast<std::size_t>(best)];
            // ascending scan: replace only on strict improvement, so ties
            // keep the smaller id
            if (prefer_low ? su < sb : su > sb) best = u;
        }
        if (best < 0) break;
        state[static_cast<std::size_t>(best)] = static_cast<int>(Role::exporter);
        const auto [lo, hi] = topology.out_arc_range(best);
        for (int a = lo; a < hi; ++a) {
            const BridgeId v = topology.arc(a).to;
            if (state[static_cast<std::size_t>(v)] == kUnassigned) {
                state[static_cast<std::size_t>(v)] = static_cast<int>(Role::importer);
                exporter_of[static_cast<std::size_t>(v)] = best;
            }
        }
    }

    RoleAssignment roles;
    roles.role.resize(static_cast<std::size_t>(n));
    roles.exporter_of = std::move(exporter_of);
    for (BridgeId u = 0; u < n; ++u) {
        const auto i = static_cast<std::size_t>(u);
        if (state[i] == kUnassigned) state[i] = static_cast<int>(Role::neutral);
        roles.role[i] = static_cast<Role>(state[i]);
        switch (roles.role[i]) {
            case Role::exporter: roles.exporters.push_back(u); break;
            case Role::importer: roles.importers.emplace_back(u, roles.exporter_of[i]); break;
            case Role::neutral: roles.neutrals.push_back(u); break;
        }
    }
    return roles;
}

std::vector<int> collect_off_candidates(const Topology& topology,
                                        const std::vector<SptTree>& trees,
                                        const RoleAssignment& roles) {
    const int m = topology.arc_count();
    const int cap = m - l_min(topology);
    std::vector<int> collected;
    collected.reserve(static_cast<std::size_t>(std::max(cap, 0)));
    auto room = [&] { return static_cast<int>(collected.size()) < cap; };

    ArcMask in_some_tree(static_cast<std::size_t>(m), 0);
    for (const SptTree& tree : trees) {
        for (std::size_t v = 0; v < tree.parent_arc.size(); ++v) {
            if (static_cast<BridgeId>(v) != tree.root) {
                in_some_tree[static_cast<std::size_t>(tree.parent_arc[v])] = 1;
            }
        }
    }
    ArcMask listed(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m && room(); ++a) {
        if (!in_some_tree[static_cast<std::size_t>(a)]) {
            collected.push_back(a);
            listed[static_cast<std::size_t>(a)] = 1;
        }
    }

    // adopted tree = exporter tree with the exporter->importer arc replaced
    // by its reverse; the importer stops using everything in its own tree
    // that the adopted tree does not cover
    ArcMask adopted(static_cast<std::size_t>(m), 0);
    for (const auto& [imp, exp] : roles.importers) {
        if (!room()) break;
        const SptTree& exporter_tree = trees[static_cast<std::size_t>(exp)];
        if (exporter_tree.parent[static_cast<std::size_t>(imp)] != exp) continue;

        std::fill(adopted.begin(), adopted.end(), 0);
        for (std::size_t v = 0; v < exporter_tree.parent_arc.size(); ++v) {
            if (static_cast<BridgeId>(v) == exp) continue;
            adopted[static_cast<std::size_t>(exporter_tree.parent_arc[v])] = 1;
        }
        adopted[static_cast<std::size_t>(exporter_tree.parent_arc[static_cast<std::size_t>(
            imp)])] = 0;
        adopted[static_cast<std::size_t>(topology.arc_index(imp, exp))] = 1;

        const SptTree& own_tree = trees[static_cast<std::size_t>(imp)];
        std::vector<int> dropped;
        for (std::size_t v = 0; v < own_tree.parent_arc.size(); ++v) {
            if (static_cast<BridgeId>(v) == imp) continue;
            const int a = own_tree.parent_arc[v];
            if (!adopted[static_cast<std::size_t>(a)] && !listed[static_cast<std::size_t>(a)]) {
                dropped.push_back(a);
                listed[static_cast<std::size_t>(a)] = 1;
            }
        }
        std::sort(dropped.begin(), dropped.end());
        for (int a : dropped) {
            if (!room()) break;
            collected.push_back(a);
        }
    }
    return collected;
}

std::vector<int> connectivity_guard(const Topology& topology, std::vector<int> candidates) {
    std::sort(candidates.begin(), candidates.end());
    ArcMask active = full_mask(topology);
    std::vector<int> off;
    off.reserve(candidates.size());
    for (int a : candidates) {
        active[static_cast<std::size_t>(a)] = 0;
        if (is_strongly_connected(topology, active)) {
            off.push_back(a);
        } else {
            active[static_cast<std::size_t>(a)] = 1;
        }
    }
    return off;
}

PruneResult finalize_prune(const Topology& topology, std::vector<int> off_arcs,
                           CostMetric metric, const DemandSet* demands) {
    std::sort(off_arcs.begin(), off_arcs.end());
    PruneResult result;
    result.off_arcs = std::move(off_arcs);
    result.active = full_mask(topology);
    for (int a : result.off_arcs) result.active[static_cast<std::size_t>(a)] = 0;
    result.active_arcs.reserve(static_cast<std::size_t>(topology.arc_count()) -
                               result.off_arcs.size());
    for (int a = 0; a < topology.arc_count(); ++a) {
        if (result.active[static_cast<std::size_t>(a)]) result.active_arcs.push_back(a);
    }
    result.residual_routing.reserve(static_cast<std::size_t>(topology.node_count()));
    for (BridgeId root = 0; root < topology.node_count(); ++root) {
        result.residual_routing.push_back(
            shortest_path_tree(topology, root, metric, result.active));
    }
    if (demands) {
        result.final_loads = route_demands(topology, result.active, *demands, metric);
    } else {
        result.final_loads.load.assign(static_cast<std::size_t>(topology.arc_count()), 0.0);
    }
    return result;
}

}  // namespace eafs::detail
