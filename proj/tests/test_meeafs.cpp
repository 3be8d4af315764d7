#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "eafs/ear.hpp"
#include "eafs/meeafs.hpp"
#include "eafs/metrics.hpp"
#include "support.hpp"

using eafs::CostMetric;
using eafs::DemandSet;
using eafs::MeeafsConfig;
using eafs::Mspt;
using eafs::PruneResult;
using eafs::RoleAssignment;
using eafs::SptTree;
using eafs::Topology;

namespace {

std::set<int> arc_set(const SptTree& tree) {
    const auto arcs = tree.tree_arcs();
    return {arcs.begin(), arcs.end()};
}

}  // namespace

TEST_CASE("bridge weights on the five-node mesh") {
    const Topology topo = test::five_node_mesh();
    CHECK(eafs::bridge_weight(topo, 0) == doctest::Approx(1.4).epsilon(1e-12));
    CHECK(eafs::bridge_weight(topo, 1) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(eafs::bridge_weight(test::two_node(), 0) == 0.3);
}

TEST_CASE("energy election prefers the lightest bridge") {
    const Topology topo = test::five_node_mesh();
    const RoleAssignment roles = eafs::elect_exporters_by_energy(topo);
    CHECK(roles.exporters == std::vector<int>{0});
    REQUIRE(roles.importers.size() == 4);
    CHECK(roles.exporter_of[1] == 0);
    CHECK(roles.neutrals.empty());
}

TEST_CASE("energy election runs to exhaustion on a path") {
    // weights ascend along 0-1-2; after 0 exports and 1 imports, node 2 has
    // no unassigned neighbor but is still elected
    const Topology topo = test::make_topology(3, {{0, 1, 0.1}, {1, 2, 0.3}});
    // W0 = 0.1, W1 = 0.4, W2 = 0.3
    const RoleAssignment roles = eafs::elect_exporters_by_energy(topo);
    CHECK(roles.exporters == std::vector<int>{0, 2});
    REQUIRE(roles.importers.size() == 1);
    CHECK(roles.importers[0] == std::pair<int, int>{1, 0});
    CHECK(roles.neutrals.empty());
}

TEST_CASE("equal weights fall back to the id tie-break") {
    const Topology topo =
        test::make_topology(4, {{0, 1, 0.2}, {1, 2, 0.2}, {2, 3, 0.2}, {3, 0, 0.2}});
    const RoleAssignment roles = eafs::elect_exporters_by_energy(topo);
    CHECK(roles.exporters == std::vector<int>{0, 2});
    CHECK(roles.neutrals.empty());
}

TEST_CASE("reroot on the two-node tree") {
    const Topology topo = test::two_node();
    const SptTree tree = eafs::shortest_path_tree(topo, 0, CostMetric::energy);
    const Mspt mspt = eafs::reroot_at_neighbor(topo, tree, 1, CostMetric::energy);
    CHECK(mspt.importer == 1);
    CHECK(mspt.exporter == 0);
    CHECK(mspt.tree.root == 1);
    CHECK(arc_set(mspt.tree) == std::set<int>{topo.arc_index(1, 0)});
    CHECK(mspt.tree.distance[0] == 0.3);
}

TEST_CASE("reroot flips exactly one arc of the mesh tree") {
    const Topology topo = test::five_node_mesh();
    const SptTree tree = eafs::shortest_path_tree(topo, 0, CostMetric::energy);
    REQUIRE(tree.parent[1] == 0);
    const Mspt mspt = eafs::reroot_at_neighbor(topo, tree, 1, CostMetric::energy);
    std::set<int> before = arc_set(tree);
    std::set<int> after = arc_set(mspt.tree);
    std::set<int> diff;
    std::set_symmetric_difference(before.begin(), before.end(), after.begin(), after.end(),
                                  std::inserter(diff, diff.begin()));
    CHECK(diff == std::set<int>{topo.arc_index(0, 1), topo.arc_index(1, 0)});
}

TEST_CASE("reroot of a star at a leaf") {
    const Topology topo = test::star5();
    const SptTree tree = eafs::shortest_path_tree(topo, 0, CostMetric::energy);
    const Mspt mspt = eafs::reroot_at_neighbor(topo, tree, 2, CostMetric::energy);
    std::set<int> expected{topo.arc_index(2, 0), topo.arc_index(0, 1), topo.arc_index(0, 3),
                           topo.arc_index(0, 4)};
    CHECK(arc_set(mspt.tree) == expected);
    // tree distances are measured from the new root
    CHECK(mspt.tree.distance[0] == 0.2);
    CHECK(mspt.tree.distance[1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(mspt.tree.hops[4] == 2);
}

TEST_CASE("reroot rejects nodes that are not direct children") {
    const Topology topo = test::triangle();
    const SptTree tree = eafs::shortest_path_tree(topo, 0, CostMetric::energy);
    REQUIRE(tree.parent[2] == 1);  // 2 hangs off 1, not off the root
    CHECK_THROWS_AS(eafs::reroot_at_neighbor(topo, tree, 2, CostMetric::energy),
                    std::invalid_argument);
    CHECK_THROWS_AS(eafs::reroot_at_neighbor(topo, tree, 0, CostMetric::energy),
                    std::invalid_argument);
}

TEST_CASE("threshold zero keeps every loaded candidate on") {
    const Topology topo = eafs::generate_random_topology(30, 170, 0.1, 0.5, 11);
    const DemandSet demands = eafs::generate_demands(topo, 0.5, 4);
    const eafs::MeeafsPlan plan = plan_meeafs(topo, demands, CostMetric::energy);
    const PruneResult result = apply_threshold(topo, demands, plan, 0.0, CostMetric::energy);
    for (int a : result.off_arcs) {
        CHECK(plan.baseline_loads.load[static_cast<std::size_t>(a)] == 0.0);
    }
}

TEST_CASE("no traffic plus threshold one gives maximal pruning") {
    const Topology topo = eafs::generate_random_topology(30, 170, 0.1, 0.5, 11);
    const DemandSet none = eafs::generate_demands(topo, 0.0, 4);
    const eafs::MeeafsPlan plan = plan_meeafs(topo, none, CostMetric::energy);
    const PruneResult result = apply_threshold(topo, none, plan, 1.0, CostMetric::energy);
    CHECK(result.off_arcs == plan.candidate_off);  // nothing is kept back
    CHECK(result.active_arcs.size() >= static_cast<std::size_t>(eafs::l_min(topo)));
}

TEST_CASE("off set grows monotonically with the threshold") {
    const Topology topo = eafs::generate_random_topology(50, 348, 0.1, 0.5, 3);
    const DemandSet demands = eafs::generate_demands(topo, 0.2, 3);
    const eafs::MeeafsPlan plan = plan_meeafs(topo, demands, CostMetric::energy);
    std::size_t previous = 0;
    for (double th = 0.0; th <= 1.0; th += 0.1) {
        const PruneResult result = apply_threshold(topo, demands, plan, th, CostMetric::energy);
        CHECK(result.off_arcs.size() >= previous);
        previous = result.off_arcs.size();
    }
}

TEST_CASE("plan and one-shot run agree") {
    const Topology topo = eafs::generate_random_topology(26, 120, 0.1, 0.5, 15);
    const DemandSet demands = eafs::generate_demands(topo, 0.3, 8);
    const eafs::MeeafsPlan plan = plan_meeafs(topo, demands, CostMetric::energy);
    const PruneResult a = apply_threshold(topo, demands, plan, 0.4, CostMetric::energy);
    const PruneResult b = run_meeafs(topo, demands, MeeafsConfig{0.4, 1.0}, CostMetric::energy);
    CHECK(a.off_arcs == b.off_arcs);
    CHECK(a.final_loads.load == b.final_loads.load);
}

TEST_CASE("structural invariants across a randomized suite") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int nodes = 8 + static_cast<int>(seed % 16);
        const int max_links = nodes * (nodes - 1);
        int links = 2 * (nodes - 1) + 2 * static_cast<int>((seed * 7) % 40);
        if (links > max_links) links = max_links - max_links % 2;
        const Topology topo = eafs::generate_random_topology(nodes, links, 0.1, 0.5, seed + 31);
        const DemandSet demands = eafs::generate_demands(topo, 0.3, seed);
        const double threshold = static_cast<double>(seed % 5) / 4.0;
        const PruneResult result =
            run_meeafs(topo, demands, MeeafsConfig{threshold, 1.0}, CostMetric::energy);

        CHECK(result.off_arcs.size() + result.active_arcs.size() ==
              static_cast<std::size_t>(topo.arc_count()));
        CHECK(result.active_arcs.size() >= static_cast<std::size_t>(eafs::l_min(topo)));
        CHECK(test::strongly_connected_oracle(topo, result.active));

        // every switched-off arc passed the baseline load threshold
        const eafs::LoadMap baseline =
            eafs::route_demands(topo, eafs::full_mask(topo), demands, CostMetric::energy);
        for (int a : result.off_arcs) {
            CHECK(baseline.load[static_cast<std::size_t>(a)] <=
                  threshold * topo.arc(a).capacity);
        }
    }
}

TEST_CASE("degree and energy elections diverge on heterogeneous weights") {
    bool diverged = false;
    for (std::uint64_t seed = 0; seed < 8 && !diverged; ++seed) {
        const Topology topo = eafs::generate_random_topology(50, 348, 0.1, 0.5, seed);
        diverged = eafs::elect_exporters_by_degree(topo).exporters !=
                   eafs::elect_exporters_by_energy(topo).exporters;
    }
    CHECK(diverged);
}
