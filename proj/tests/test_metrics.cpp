#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eafs/metrics.hpp"
#include "support.hpp"

using eafs::ArcMask;
using eafs::LoadMap;
using eafs::Topology;

TEST_CASE("sigma endpoints and a midpoint") {
    CHECK(eafs::sigma(348, 348, 50) == 0.0);
    CHECK(eafs::sigma(348, 98, 50) == 100.0);
    CHECK(eafs::sigma(348, 223, 50) == 50.0);  // 100 * 125 / 250
}

TEST_CASE("sigma rejects the degenerate and out-of-range cases") {
    CHECK_THROWS_AS(eafs::sigma(98, 98, 50), std::domain_error);
    CHECK_THROWS_AS(eafs::sigma(348, 97, 50), std::invalid_argument);
    CHECK_THROWS_AS(eafs::sigma(348, 349, 50), std::invalid_argument);
}

TEST_CASE("sigma strictly decreases as more arcs stay active") {
    double previous = 101.0;
    for (int active = 98; active <= 348; active += 10) {
        const double value = eafs::sigma(348, active, 50);
        CHECK(value < previous);
        previous = value;
    }
}

TEST_CASE("rho is the mean active utilization in percent") {
    const Topology topo = test::two_node();
    const ArcMask active = eafs::full_mask(topo);
    LoadMap loads;

    loads.load = {0.0, 0.0};
    CHECK(eafs::rho(loads, active, topo) == 0.0);

    loads.load = {0.4, 0.6};
    CHECK(eafs::rho(loads, active, topo) == 50.0);

    ArcMask single(2, 0);
    single[0] = 1;
    loads.load = {1.0, 0.0};
    CHECK(eafs::rho(loads, single, topo) == 100.0);

    CHECK_THROWS_AS(eafs::rho(loads, ArcMask(2, 0), topo), std::invalid_argument);
}

TEST_CASE("rho matches a brute-force mean on random loads") {
    const Topology topo = eafs::generate_random_topology(12, 50, 0.1, 0.5, 6);
    LoadMap loads;
    loads.load.resize(static_cast<std::size_t>(topo.arc_count()));
    for (std::size_t a = 0; a < loads.load.size(); ++a) {
        loads.load[a] = static_cast<double>(a % 7) * 0.05;
    }
    const ArcMask active = eafs::full_mask(topo);
    double expected = 0.0;
    for (int a = 0; a < topo.arc_count(); ++a) {
        expected += loads.load[static_cast<std::size_t>(a)] / topo.arc(a).capacity;
    }
    expected = 100.0 * expected / topo.arc_count();
    CHECK(eafs::rho(loads, active, topo) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("fairness is exactly one for equal positive loads") {
    const Topology topo = test::five_node_mesh();  // 20 arcs
    LoadMap loads;
    loads.load.assign(20, 0.25);
    CHECK(eafs::fairness(loads, eafs::full_mask(topo), topo) == 1.0);
}

TEST_CASE("fairness collapses to 1/n for a single loaded arc") {
    const Topology topo = test::make_topology(5, {{0, 1, 0.2}, {1, 2, 0.2}, {2, 3, 0.2},
                                                  {3, 4, 0.2}});  // 8 arcs
    LoadMap loads;
    loads.load.assign(8, 0.0);
    loads.load[3] = 0.5;
    CHECK(eafs::fairness(loads, eafs::full_mask(topo), topo) == 0.125);
}

TEST_CASE("fairness rational example") {
    const Topology topo = test::two_node();
    LoadMap loads;
    loads.load = {1.0, 3.0};
    CHECK(eafs::fairness(loads, eafs::full_mask(topo), topo) == 0.8);  // 16 / 20
}

TEST_CASE("fairness is scale invariant") {
    const Topology topo = eafs::generate_random_topology(10, 36, 0.1, 0.5, 13);
    LoadMap loads;
    loads.load.resize(static_cast<std::size_t>(topo.arc_count()));
    for (std::size_t a = 0; a < loads.load.size(); ++a) {
        loads.load[a] = 0.01 * static_cast<double>(a + 1);
    }
    const ArcMask active = eafs::full_mask(topo);
    const double base = eafs::fairness(loads, active, topo);
    CHECK(base > 0.0);
    CHECK(base <= 1.0);
    for (double k : {2.0, 10.0, 0.5}) {
        LoadMap scaled = loads;
        for (double& v : scaled.load) v *= k;
        CHECK(eafs::fairness(scaled, active, topo) ==
              doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("fairness reports the no-traffic sentinel") {
    const Topology topo = test::two_node();
    LoadMap loads;
    loads.load = {0.0, 0.0};
    CHECK(std::isnan(eafs::fairness(loads, eafs::full_mask(topo), topo)));
}

TEST_CASE("energy objective sums the active arc energies") {
    const Topology topo = test::triangle();
    CHECK(eafs::energy_on(topo, eafs::full_mask(topo)) == doctest::Approx(10.0).epsilon(1e-12));
    ArcMask none(static_cast<std::size_t>(topo.arc_count()), 0);
    CHECK(eafs::energy_on(topo, none) == 0.0);
}
