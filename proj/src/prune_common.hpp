#pragma once

// Internal machinery shared by the EAR and MEEAFS switch-off passes.

#include <vector>

#include "eafs/ear.hpp"
#include "eafs/routing.hpp"
#include "eafs/topology.hpp"
#include "eafs/traffic.hpp"

namespace eafs::detail {

// Greedy exporter election. `score` ranks candidates (lower wins when
// prefer_low); ties go to the smaller id. With require_unassigned_neighbor,
// bridges whose neighbors are all assigned are never elected and end up
// neutral; without it the election runs until every bridge is assigned.
RoleAssignment elect_greedy(const Topology& topology, const std::vector<double>& score,
                            bool prefer_low, bool require_unassigned_neighbor);

// Ordered switch-off candidates: first the arcs no tree uses at all, then,
// importer by importer (ascending id, each importer's arcs ascending), the
// arcs of the importer's own tree that leave service when it adopts its
// exporter's tree re-rooted at itself. Importers that are not direct
// children of their exporter's tree root cannot re-root and extract
// nothing. Collection stops at the 2(|N|-1) connectivity floor.
std::vector<int> collect_off_candidates(const Topology& topology,
                                        const std::vector<SptTree>& trees,
                                        const RoleAssignment& roles);

// Keeps an arc on whenever removing it would break strong connectivity of
// the current residual set; candidates are processed ascending. Returns the
// arcs that stay off (ascending).
std::vector<int> connectivity_guard(const Topology& topology, std::vector<int> candidates);

// Builds the final PruneResult from an off-arc list: index lists, mask,
// per-root residual trees, and (when demands are given) the re-routed loads.
PruneResult finalize_prune(const Topology& topology, std::vector<int> off_arcs,
                           CostMetric metric, const DemandSet* demands);

}  // namespace eafs::detail
