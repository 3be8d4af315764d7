#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eafs/routing.hpp"
#include "eafs/topology.hpp"

namespace eafs {

struct Demand {
    BridgeId source{};
    BridgeId target{};
    double volume{};  // traffic units
};

// Static snapshot of concurrent demands: per ordered node pair the demand
// count is Poisson(lambda) and each volume is uniform in
// [0.001 * c, 0.1 * c] with c the (uniform) arc capacity.
struct DemandSet {
    std::vector<Demand> demands;
    double lambda{};
    std::uint64_t seed{};
};

DemandSet generate_demands(const Topology& topology, double lambda, std::uint64_t seed);

// Per-arc routed load plus the arc sequence each demand took.
struct LoadMap {
    std::vector<double> load;             // indexed by arc
    std::vector<std::vector<int>> paths;  // indexed by demand

    double total_load() const;
};

// Routes every demand unsplit along the shortest path within the active arc
// set (same metric and tie-breaking as shortest_path_tree). Throws if some
// demand's endpoints are not connected within `active`, naming the pair.
LoadMap route_demands(const Topology& topology, const ArcMask& active,
                      const DemandSet& demands, CostMetric metric);

struct UtilizationViolation {
    int arc{};
    double load{};
    double limit{};   // mu * capacity
    double excess{};  // load - limit
};

// Arcs whose load strictly exceeds mu * capacity. mu must be in (0, 1].
std::vector<UtilizationViolation> check_utilization(const LoadMap& loads,
                                                    const Topology& topology, double mu);

// "source,target,volume" CSV, one demand per row, for reproducibility dumps.
std::string demands_to_csv(const DemandSet& demands);

}  // namespace eafs
