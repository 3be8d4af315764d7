#include "eafs/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eafs {

double sigma(int total_arcs, int active_arcs, int node_count) {
    const int floor = 2 * (node_count - 1);
    if (total_arcs == floor) {
        throw std::domain_error("sigma is undefined: |E| equals the connectivity floor " +
                                std::to_string(floor));
    }
    if (total_arcs < floor) {
        throw std::invalid_argument("total_arcs below the connectivity floor");
    }
    if (active_arcs < floor || active_arcs > total_arcs) {
        throw std::invalid_argument("active_arcs must lie in [" + std::to_string(floor) + ", " +
                                    std::to_string(total_arcs) + "]");
    }
    return 100.0 * static_cast<double>(total_arcs - active_arcs) /
           static_cast<double>(total_arcs - floor);
}

double rho(const LoadMap& loads, const ArcMask& active, const Topology& topology) {
    int count = 0;
    double sum = 0.0;
    for (int a = 0; a < topology.arc_count(); ++a) {
        if (!active[static_cast<std::size_t>(a)]) continue;
        ++count;
        sum += loads.load[static_cast<std::size_t>(a)] / topology.arc(a).capacity;
    }
    if (count == 0) throw std::invalid_argument("rho requires a nonempty active set");
    return 100.0 * sum / static_cast<double>(count);
}

double fairness(const LoadMap& loads, const ArcMask& active, const Topology& topology) {
    int count = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int a = 0; a < topology.arc_count(); ++a) {
        if (!active[static_cast<std::size_t>(a)]) continue;
        ++count;
        const double u = loads.load[static_cast<std::size_t>(a)] / topology.arc(a).capacity;
        sum += u;
        sum_sq += u * u;
    }
    if (count == 0) throw std::invalid_argument("fairness requires a nonempty active set");
    if (sum == 0.0) return std::numeric_limits<double>::quiet_NaN();  // no traffic
    return (sum * sum) / (static_cast<double>(count) * sum_sq);
}

double energy_on(const Topology& topology, const ArcMask& active) {
    double total = 0.0;
    for (int a = 0; a < topology.arc_count(); ++a) {
        if (active[static_cast<std::size_t>(a)]) total += topology.arc(a).energy;
    }
    return total;
}

MetricsReport compute_report(const Topology& topology, const PruneResult& result,
                             const LoadMap& loads) {
    MetricsReport report;
    report.active_count = static_cast<int>(result.active_arcs.size());
    report.off_count = static_cast<int>(result.off_arcs.size());
    report.sigma_percent =
        topology.arc_count() == 2 * (topology.node_count() - 1)
            ? std::numeric_limits<double>::quiet_NaN()
            : sigma(topology.arc_count(), report.active_count, topology.node_count());
    report.rho_percent = rho(loads, result.active, topology);
    report.fairness = fairness(loads, result.active, topology);
    report.energy_on = energy_on(topology, result.active);
    report.max_utilization = 0.0;
    for (int a = 0; a < topology.arc_count(); ++a) {
        if (!result.active[static_cast<std::size_t>(a)]) continue;
        const double u = loads.load[static_cast<std::size_t>(a)] / topology.arc(a).capacity;
        if (u > report.max_utilization) report.max_utilization = u;
    }
    return report;
}

}  // namespace eafs
