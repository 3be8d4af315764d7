#include "eafs/traffic.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "eafs/error.hpp"
#include "eafs/rng.hpp"

namespace eafs {

DemandSet generate_demands(const Topology& topology, double lambda, std::uint64_t seed) {
    if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
    DemandSet set;
    set.lambda = lambda;
    set.seed = seed;
    if (lambda == 0.0) return set;

    // volumes are fractions of the (uniform) arc capacity
    double capacity = 0.0;
    for (const Arc& a : topology.arcs()) capacity = std::max(capacity, a.capacity);

    Rng rng(seed);
    const int n = topology.node_count();
    for (BridgeId s = 0; s < n; ++s) {
        for (BridgeId t = 0; t < n; ++t) {
            if (s == t) continue;
            const int count = rng.poisson(lambda);
            for (int k = 0; k < count; ++k) {
                const double volume = rng.uniform(0.001 * capacity, 0.1 * capacity);
                set.demands.push_back(Demand{s, t, volume});
            }
        }
    }
    return set;
}

double LoadMap::total_load() const {
    double sum = 0.0;
    for (double v : load) sum += v;
    return sum;
}

LoadMap route_demands(const Topology& topology, const ArcMask& active,
                      const DemandSet& demands, CostMetric metric) {
    LoadMap loads;
    loads.load.assign(static_cast<std::size_t>(topology.arc_count()), 0.0);
    loads.paths.resize(demands.demands.size());

    // one restricted tree per distinct source
    std::vector<int> tree_of_source(static_cast<std::size_t>(topology.node_count()), -1);
    std::vector<SptTree> trees;
    for (std::size_t d = 0; d < demands.demands.size(); ++d) {
        const Demand& demand = demands.demands[d];
        if (demand.source == demand.target) {
            throw std::invalid_argument("demand with identical endpoints " +
                                        std::to_string(demand.source));
        }
        int& slot = tree_of_source[static_cast<std::size_t>(demand.source)];
        if (slot < 0) {
            trees.push_back(detail::dijkstra(topology, demand.source, metric, &active));
            slot = static_cast<int>(trees.size()) - 1;
        }
        const SptTree& tree = trees[static_cast<std::size_t>(slot)];
        if (tree.distance[static_cast<std::size_t>(demand.target)] ==
            std::numeric_limits<double>::infinity()) {
            throw DataError("demand (" + std::to_string(demand.source) + "," +
                            std::to_string(demand.target) +
                            ") is unreachable within the active arc set");
        }
        std::vector<int> path = tree.path_arcs(demand.target);
        for (int a : path) loads.load[static_cast<std::size_t>(a)] += demand.volume;
        loads.paths[d] = std::move(path);
    }
    return loads;
}

std::vector<UtilizationViolation> check_utilization(const LoadMap& loads,
                                                    const Topology& topology, double mu) {
    if (!(mu > 0.0) || mu > 1.0) throw std::invalid_argument("mu must be in (0, 1]");
    std::vector<UtilizationViolation> violations;
    for (int a = 0; a < topology.arc_count(); ++a) {
        const double limit = mu * topology.arc(a).capacity;
        const double load = loads.load[static_cast<std::size_t>(a)];
        if (load > limit) {
            violations.push_back(UtilizationViolation{a, load, limit, load - limit});
        }
    }
    return violations;
}

std::string demands_to_csv(const DemandSet& demands) {
    std::string out = "source,target,volume\n";
    char buf[32];
    for (const Demand& d : demands.demands) {
        out += std::to_string(d.source);
        out += ',';
        out += std::to_string(d.target);
        out += ',';
        const auto res = std::to_chars(buf, buf + sizeof(buf), d.volume);
        out.append(buf, res.ptr);
        out += '\n';
    }
    return out;
}

}  // namespace eafs
