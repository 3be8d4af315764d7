#pragma once

#include "eafs/ear.hpp"
#include "eafs/routing.hpp"
#include "eafs/topology.hpp"
#include "eafs/traffic.hpp"

namespace eafs {

// Energy-saving index in percent: 100 * (|E| - |E_s|) / (|E| - L_min).
// 0 when nothing beyond the full set is active, 100 when pruned to the
// connectivity floor. Throws when |E| == L_min (degenerate denominator).
double sigma(int total_arcs, int active_arcs, int node_count);

// Average utilization of the active arcs, in percent.
double rho(const LoadMap& loads, const ArcMask& active, const Topology& topology);

// Jain's fairness index over the active arcs' utilizations:
// (sum u_i)^2 / (n * sum u_i^2). 1 means perfectly even. Returns NaN when
// no active arc carries traffic (the documented no-traffic sentinel).
double fairness(const LoadMap& loads, const ArcMask& active, const Topology& topology);

// Total energy of the powered arcs (the switch-on objective value).
double energy_on(const Topology& topology, const ArcMask& active);

struct MetricsReport {
    double sigma_percent{};   // NaN when |E| == L_min
    double rho_percent{};
    double fairness{};        // NaN when no traffic
    double energy_on{};
    double max_utilization{};
    int active_count{};
    int off_count{};
};

MetricsReport compute_report(const Topology& topology, const PruneResult& result,
                             const LoadMap& loads);

}  // namespace eafs
