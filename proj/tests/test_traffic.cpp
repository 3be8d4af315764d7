#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "eafs/error.hpp"
#include "eafs/traffic.hpp"
#include "support.hpp"

using eafs::DemandSet;
using eafs::LoadMap;
using eafs::Topology;

TEST_CASE("lambda zero yields no demands") {
    const Topology topo = test::two_node();
    const DemandSet set = eafs::generate_demands(topo, 0.0, 1);
    CHECK(set.demands.empty());
}

TEST_CASE("demand count is near the Poisson mean and volumes stay in range") {
    const Topology topo = eafs::generate_random_topology(50, 348, 0.1, 0.5, 7);
    const DemandSet set = eafs::generate_demands(topo, 0.2, 12345);
    // mean = 0.2 * 50 * 49 = 490, four standard deviations = 4 * sqrt(490)
    const double mean = 490.0;
    const double bound = 4.0 * std::sqrt(mean);
    CHECK(std::abs(static_cast<double>(set.demands.size()) - mean) <= bound);
    for (const eafs::Demand& d : set.demands) {
        CHECK(d.source != d.target);
        CHECK(d.volume >= 0.001);
        CHECK(d.volume <= 0.1);
    }
}

TEST_CASE("demand generation is deterministic per seed") {
    const Topology topo = eafs::generate_random_topology(20, 80, 0.1, 0.5, 2);
    const DemandSet a = eafs::generate_demands(topo, 0.5, 9);
    const DemandSet b = eafs::generate_demands(topo, 0.5, 9);
    const DemandSet c = eafs::generate_demands(topo, 0.5, 10);
    CHECK(eafs::demands_to_csv(a) == eafs::demands_to_csv(b));
    CHECK(eafs::demands_to_csv(a) != eafs::demands_to_csv(c));
}

TEST_CASE("demand CSV carries one row per demand") {
    const Topology topo = test::triangle();
    DemandSet set;
    set.demands = {{0, 2, 0.05}, {2, 1, 0.01}};
    const std::string csv = eafs::demands_to_csv(set);
    CHECK(csv == "source,target,volume\n0,2,0.05\n2,1,0.01\n");
}

TEST_CASE("routing the empty demand set leaves all loads zero") {
    const Topology topo = test::triangle();
    const LoadMap loads =
        eafs::route_demands(topo, eafs::full_mask(topo), DemandSet{}, eafs::CostMetric::energy);
    CHECK(loads.total_load() == 0.0);
}

TEST_CASE("single demand on the two-node topology") {
    const Topology topo = test::two_node();
    DemandSet set;
    set.demands = {{0, 1, 0.05}};
    const LoadMap loads =
        eafs::route_demands(topo, eafs::full_mask(topo), set, eafs::CostMetric::energy);
    CHECK(loads.load[static_cast<std::size_t>(topo.arc_index(0, 1))] == 0.05);
    CHECK(loads.load[static_cast<std::size_t>(topo.arc_index(1, 0))] == 0.0);
}

TEST_CASE("triangle demand follows the cheap two-hop path") {
    const Topology topo = test::triangle();
    DemandSet set;
    set.demands = {{0, 2, 0.25}};
    const LoadMap loads =
        eafs::route_demands(topo, eafs::full_mask(topo), set, eafs::CostMetric::energy);
    CHECK(loads.load[static_cast<std::size_t>(topo.arc_index(0, 1))] == 0.25);
    CHECK(loads.load[static_cast<std::size_t>(topo.arc_index(1, 2))] == 0.25);
    CHECK(loads.load[static_cast<std::size_t>(topo.arc_index(0, 2))] == 0.0);
}

TEST_CASE("flow conservation holds exactly for every routed demand") {
    const Topology topo = eafs::generate_random_topology(24, 100, 0.1, 0.5, 5);
    const DemandSet set = eafs::generate_demands(topo, 0.3, 17);
    const LoadMap loads =
        eafs::route_demands(topo, eafs::full_mask(topo), set, eafs::CostMetric::energy);
    REQUIRE(loads.paths.size() == set.demands.size());
    for (std::size_t d = 0; d < set.demands.size(); ++d) {
        const eafs::Demand& demand = set.demands[d];
        std::map<int, double> net;
        for (int a : loads.paths[d]) {
            net[topo.arc(a).from] += demand.volume;
            net[topo.arc(a).to] -= demand.volume;
        }
        for (const auto& [node, flow] : net) {
            if (node == demand.source) {
                CHECK(flow == demand.volume);
            } else if (node == demand.target) {
                CHECK(flow == -demand.volume);
            } else {
                CHECK(flow == 0.0);
            }
        }
    }
}

TEST_CASE("total load equals volume times hop count, summed over demands") {
    const Topology topo = eafs::generate_random_topology(18, 72, 0.1, 0.5, 8);
    const DemandSet set = eafs::generate_demands(topo, 0.4, 21);
    const LoadMap loads =
        eafs::route_demands(topo, eafs::full_mask(topo), set, eafs::CostMetric::energy);
    double expected = 0.0;
    for (std::size_t d = 0; d < set.demands.size(); ++d) {
        expected += set.demands[d].volume * static_cast<double>(loads.paths[d].size());
    }
    CHECK(loads.total_load() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("routing is deterministic and restriction to the full set changes nothing") {
    const Topology topo = eafs::generate_random_topology(20, 76, 0.1, 0.5, 4);
    const DemandSet set = eafs::generate_demands(topo, 0.3, 33);
    const LoadMap a =
        eafs::route_demands(topo, eafs::full_mask(topo), set, eafs::CostMetric::energy);
    const LoadMap b =
        eafs::route_demands(topo, eafs::full_mask(topo), set, eafs::CostMetric::energy);
    CHECK(a.load == b.load);
    CHECK(a.paths == b.paths);
}

TEST_CASE("unreachable demand names the pair") {
    const Topology topo = test::two_node();
    eafs::ArcMask active = eafs::full_mask(topo);
    active[static_cast<std::size_t>(topo.arc_index(0, 1))] = 0;
    DemandSet set;
    set.demands = {{0, 1, 0.05}};
    CHECK_THROWS_WITH_AS(eafs::route_demands(topo, active, set, eafs::CostMetric::energy),
                         doctest::Contains("demand (0,1)"), eafs::DataError);
}

TEST_CASE("utilization report lists only strict violations") {
    const Topology topo = test::two_node();
    LoadMap loads;
    loads.load = {0.9, 0.8};  // arcs (0,1), (1,0), capacity 1.0

    auto violations = eafs::check_utilization(loads, topo, 0.8);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].arc == topo.arc_index(0, 1));
    CHECK(violations[0].excess == doctest::Approx(0.1).epsilon(1e-9));

    // load exactly at the limit is not a violation
    loads.load = {0.8, 0.0};
    CHECK(eafs::check_utilization(loads, topo, 0.8).empty());

    loads.load = {0.0, 0.0};
    CHECK(eafs::check_utilization(loads, topo, 1.0).empty());

    CHECK_THROWS_AS(eafs::check_utilization(loads, topo, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eafs::check_utilization(loads, topo, 1.5), std::invalid_argument);
}
