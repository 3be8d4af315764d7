#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eafs/routing.hpp"
#include "eafs/topology.hpp"
#include "eafs/traffic.hpp"

namespace eafs {

enum class Role : std::uint8_t { exporter, importer, neutral };

// Partition of the bridges produced by exporter election. Every importer is
// a direct neighbor of its exporter and no two exporters are neighbors.
struct RoleAssignment {
    std::vector<Role> role;                              // indexed by bridge
    std::vector<BridgeId> exporter_of;                   // importer -> exporter, else -1
    std::vector<BridgeId> exporters;                     // ascending
    std::vector<std::pair<BridgeId, BridgeId>> importers;  // (importer, exporter), ascending
    std::vector<BridgeId> neutrals;                      // ascending
};

// Outcome of a link switch-off pass: the off/active partition of the arcs,
// the recomputed per-root routing over the active set, and (when the
// algorithm routes traffic) the final per-arc loads.
struct PruneResult {
    std::vector<int> off_arcs;     // ascending arc indices (L_off)
    std::vector<int> active_arcs;  // ascending arc indices (E_s)
    ArcMask active;                // mask form of active_arcs
    std::vector<SptTree> residual_routing;  // one tree per root, over active
    LoadMap final_loads;           // empty for traffic-oblivious algorithms
};

// Degree-based exporter election: repeatedly elect the unassigned bridge of
// highest degree (ties to the smaller id) among those that still have an
// unassigned neighbor, and mark its unassigned neighbors as importers.
// Unassigned bridges whose neighbors are all assigned end up neutral.
RoleAssignment elect_exporters_by_degree(const Topology& topology);

// Baseline algorithm: degree-elected exporters, importers adopt the
// exporter's tree re-rooted at themselves, every arc used by no remaining
// tree is switched off (subject to the 2(|N|-1) floor and a strong
// connectivity guard), and routing is recomputed on the residual arcs.
// Traffic-oblivious: takes no demand input, final_loads is left empty.
PruneResult run_ear(const Topology& topology, CostMetric metric);

}  // namespace eafs
