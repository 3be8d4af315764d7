#pragma once

#include <vector>

#include "eafs/ear.hpp"
#include "eafs/routing.hpp"
#include "eafs/topology.hpp"
#include "eafs/traffic.hpp"

namespace eafs {

// An exporter's tree re-rooted at an adjacent importer. The arc set equals
// the exporter tree's except that the exporter->importer arc is replaced by
// importer->exporter (the only edge whose orientation changes when the root
// moves to a direct child).
struct Mspt {
    BridgeId importer{};
    BridgeId exporter{};
    SptTree tree;
};

struct MeeafsConfig {
    double threshold{};  // load threshold as a fraction of arc capacity, in [0, 1]
    double mu{1.0};      // max target utilization for the violation report, in (0, 1]
};

// Power consumption weight of a bridge: the sum of its outgoing arc
// energies (one line card per outgoing arc).
double bridge_weight(const Topology& topology, BridgeId node);

// Energy-based exporter election: repeatedly elect the unassigned bridge of
// smallest weight (ties to the smaller id) and mark its unassigned neighbors
// as importers. Runs until every bridge is assigned.
RoleAssignment elect_exporters_by_energy(const Topology& topology);

// Re-roots `tree` at `new_root`, which must be a direct child of the root.
Mspt reroot_at_neighbor(const Topology& topology, const SptTree& tree, BridgeId new_root,
                        CostMetric metric);

// Threshold-independent part of a MEEAFS run: baseline routing, election,
// importer tree adoption, candidate collection capped at the 2(|N|-1)
// floor, and the connectivity guard. A threshold sweep reuses one plan.
struct MeeafsPlan {
    RoleAssignment roles;
    std::vector<SptTree> baseline_trees;  // one per root, full arc set
    LoadMap baseline_loads;               // demands routed on the full arc set
    std::vector<int> candidate_off;       // guarded switch-off candidates, ascending
};

MeeafsPlan plan_meeafs(const Topology& topology, const DemandSet& demands, CostMetric metric);

// Applies the load-threshold pass to a plan: candidates whose baseline load
// exceeds threshold * capacity are kept on, the rest are switched off, and
// routing plus loads are recomputed on the residual arcs.
PruneResult apply_threshold(const Topology& topology, const DemandSet& demands,
                            const MeeafsPlan& plan, double threshold, CostMetric metric);

// plan_meeafs + apply_threshold in one call.
PruneResult run_meeafs(const Topology& topology, const DemandSet& demands,
                       const MeeafsConfig& config, CostMetric metric);

}  // namespace eafs
