#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eafs/routing.hpp"
#include "eafs/topology.hpp"

namespace eafs {

enum class Algorithm { ear, meeafs };

const char* algorithm_name(Algorithm algorithm);

struct GeneratorSpec {
    int nodes{};
    int links{};
    double energy_lo{0.1};
    double energy_hi{0.5};
};

// One experiment: a topology source, an algorithm, a load regime, and a
// threshold sweep averaged over `runs` independent runs. Run r derives its
// randomness from base_seed + r; generator topologies are regenerated per
// run, file topologies are fixed and only the demands vary.
struct Scenario {
    std::string id{"scenario"};
    std::optional<std::string> topology_path;
    std::optional<GeneratorSpec> generator;
    Algorithm algorithm{Algorithm::meeafs};
    double lambda{0.0};
    std::vector<double> thresholds;  // ascending; empty selects the default grid
    int runs{1};
    std::uint64_t base_seed{0};
    bool seed_set{false};            // explicit seeds are mandatory
    double mu{1.0};
    CostMetric cost{CostMetric::energy};
};

// 0.00, 0.05, ..., 1.00.
std::vector<double> default_threshold_grid();

// One result line. run >= 0 marks a single run; run == -1 marks the
// per-threshold aggregate row (means across runs, with sample standard
// deviations for sigma/rho/fairness). wall_time_ms is informational only
// and never serialized, so identical scenarios produce identical CSV bytes.
struct ResultRow {
    std::string scenario_id;
    std::string algorithm;
    double lambda{};
    double threshold{};
    int run{-1};
    std::uint64_t seed{};           // meaningless for aggregate rows
    std::uint64_t topology_hash{};  // 0 when it varies across aggregated runs
    double sigma{};
    double rho{};
    double fairness{};
    double energy_on{};
    double active_count{};
    double off_count{};
    double max_utilization{};
    double violations{};
    double wall_time_ms{};
    double sigma_std{};   // aggregate rows only
    double rho_std{};     // aggregate rows only
    double fairness_std{};  // aggregate rows only
};

// Executes the scenario: per run and threshold, one data row; per threshold,
// one aggregate row. Deterministic given base_seed. EAR ignores thresholds,
// so its pruning is computed once per run and repeated across the sweep.
std::vector<ResultRow> run_scenario(const Scenario& scenario);

// Full result CSV (header + rows, '\n' line endings, '.' decimal point).
std::string rows_to_csv(std::span<const ResultRow> rows);

// Per-(algorithm, lambda, threshold) means over the data rows, for plotting.
struct SummaryRow {
    std::string algorithm;
    double lambda{};
    double threshold{};
    double sigma_mean{};
    double rho_mean{};
    double fairness_mean{};
};

std::vector<SummaryRow> sweep_report(std::span<const ResultRow> rows);
std::string summary_to_csv(std::span<const SummaryRow> rows);

// Parses the flat key=value scenario config format ('#' comments). Errors
// carry 1-based line numbers. Keys: id, topology, nodes, links,
// energy_range (lo:hi), algorithm, lambda, thresholds (list or "grid"),
// runs, seed, mu, cost, output.
struct ScenarioConfig {
    Scenario scenario;
    std::optional<std::string> output;
};
ScenarioConfig parse_scenario_config(std::istream& text);
ScenarioConfig parse_scenario_config_file(const std::string& path);

// "a,b,c" ascending threshold list, or "grid" for the default grid.
std::vector<double> parse_threshold_list(const std::string& value);

// "lo:hi" numeric range.
std::pair<double, double> parse_range(const std::string& value);

// Shortest-round-trip decimal formatting shared by every CSV writer.
std::string format_double(double value);

}  // namespace eafs
