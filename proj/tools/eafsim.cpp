// eafsim - command line front-end: topology generation and validation,
// single-algorithm runs, threshold sweeps, and EAR/MEEAFS comparisons.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eafs/ear.hpp"
#include "eafs/error.hpp"
#include "eafs/experiment.hpp"
#include "eafs/meeafs.hpp"
#include "eafs/metrics.hpp"
#include "eafs/topology.hpp"

namespace {

// exit codes: 0 ok, 2 usage error, 3 data error, 4 runtime failure
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitRuntime = 4;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct GenerateOptions {
    int nodes{};
    int links{};
    std::string energy_range{"0.1:0.5"};
    std::uint64_t seed{};
    std::string output;
    double capacity{1.0};
};

int cmd_generate(const GenerateOptions& opt) {
    const auto [lo, hi] = eafs::parse_range(opt.energy_range);
    const eafs::Topology topo =
        eafs::generate_random_topology(opt.nodes, opt.links, lo, hi, opt.seed, opt.capacity);
    std::string text = "# nodes=" + std::to_string(topo.node_count()) +
                       " arcs=" + std::to_string(topo.arc_count()) +
                       " seed=" + std::to_string(opt.seed) + "\n" + topo.to_matrix_text();
    write_file(opt.output, text);
    std::printf("nodes=%d arcs=%d l_min=%d connected=yes\n", topo.node_count(),
                topo.arc_count(), eafs::l_min(topo));
    std::printf("wrote %s\n", opt.output.c_str());
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open topology file '%s'\n", path.c_str());
        return kExitData;
    }
    const eafs::MatrixCheck check = eafs::validate_matrix_text(in);
    for (const std::string& v : check.violations) {
        std::fprintf(stderr, "violation: %s\n", v.c_str());
    }
    if (!check.ok) {
        if (check.nodes > 0) {
            std::printf("nodes=%d arcs=%d l_min=%d connected=%s\n", check.nodes, check.arcs,
                        2 * (check.nodes - 1), check.connected ? "yes" : "no");
        }
        return kExitData;
    }
    std::printf("nodes=%d arcs=%d l_min=%d connected=yes\n", check.nodes, check.arcs,
                2 * (check.nodes - 1));
    return kExitOk;
}

struct ScenarioOptions {
    std::string config;
    std::string id;
    std::string topology;
    int nodes{-1};
    int links{-1};
    std::string energy_range;
    std::string algorithm;
    double lambda{-1.0};
    std::string thresholds;
    int runs{-1};
    std::uint64_t seed{};
    bool seed_given{false};
    double mu{-1.0};
    std::string cost;
    std::string output;
    std::string summary;
};

// config file first (if any), explicit flags override
eafs::ScenarioConfig build_scenario(const ScenarioOptions& opt) {
    eafs::ScenarioConfig config;
    if (!opt.config.empty()) config = eafs::parse_scenario_config_file(opt.config);
    eafs::Scenario& sc = config.scenario;

    if (!opt.id.empty()) sc.id = opt.id;
    if (!opt.topology.empty()) {
        sc.topology_path = opt.topology;
        sc.generator.reset();
    }
    if (opt.nodes >= 0 || opt.links >= 0 || !opt.energy_range.empty()) {
        eafs::GeneratorSpec gen = sc.generator.value_or(eafs::GeneratorSpec{});
        if (opt.nodes >= 0) gen.nodes = opt.nodes;
        if (opt.links >= 0) gen.links = opt.links;
        if (!opt.energy_range.empty()) {
            std::tie(gen.energy_lo, gen.energy_hi) = eafs::parse_range(opt.energy_range);
        }
        sc.generator = gen;
        sc.topology_path.reset();
    }
    if (!opt.algorithm.empty()) {
        if (opt.algorithm == "ear") {
            sc.algorithm = eafs::Algorithm::ear;
        } else if (opt.algorithm == "meeafs") {
            sc.algorithm = eafs::Algorithm::meeafs;
        } else {
            throw std::invalid_argument("--algorithm must be 'ear' or 'meeafs'");
        }
    }
    if (opt.lambda >= 0.0) sc.lambda = opt.lambda;
    if (!opt.thresholds.empty()) sc.thresholds = eafs::parse_threshold_list(opt.thresholds);
    if (opt.runs >= 0) sc.runs = opt.runs;
    if (opt.seed_given) {
        sc.base_seed = opt.seed;
        sc.seed_set = true;
    }
    if (opt.mu >= 0.0) sc.mu = opt.mu;
    if (!opt.cost.empty()) {
        if (opt.cost == "energy") {
            sc.cost = eafs::CostMetric::energy;
        } else if (opt.cost == "hop") {
            sc.cost = eafs::CostMetric::hop;
        } else {
            throw std::invalid_argument("--cost must be 'energy' or 'hop'");
        }
    }
    if (!opt.output.empty()) config.output = opt.output;
    return config;
}

void print_threshold_summary(const std::vector<eafs::ResultRow>& rows) {
    for (const eafs::ResultRow& row : rows) {
        if (row.run >= 0) continue;
        std::printf("%s th=%s sigma=%.2f rho=%.2f fi=%.3f active=%.1f off=%.1f\n",
                    row.algorithm.c_str(), eafs::format_double(row.threshold).c_str(), row.sigma,
                    row.rho, row.fairness, row.active_count, row.off_count);
    }
}

void report_hash(const std::vector<eafs::ResultRow>& rows) {
    std::uint64_t h = 0;
    for (const eafs::ResultRow& row : rows) {
        if (row.run < 0) continue;
        if (h == 0) {
            h = row.topology_hash;
        } else if (h != row.topology_hash) {
            return;  // varies per run; per-row column carries it
        }
    }
    if (h != 0) std::printf("topology_hash=%s\n", hash_hex(h).c_str());
}

int cmd_run(const ScenarioOptions& opt, bool with_summary, bool compare) {
    eafs::ScenarioConfig config = build_scenario(opt);
    const std::string output = config.output.value_or("results.csv");

    std::vector<eafs::ResultRow> rows;
    if (compare) {
        for (eafs::Algorithm algo : {eafs::Algorithm::ear, eafs::Algorithm::meeafs}) {
            eafs::Scenario sc = config.scenario;
            sc.algorithm = algo;
            std::vector<eafs::ResultRow> part = eafs::run_scenario(sc);
            rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
        }
    } else {
        rows = eafs::run_scenario(config.scenario);
    }

    write_file(output, eafs::rows_to_csv(rows));
    std::size_t data_rows = 0;
    for (const eafs::ResultRow& row : rows) data_rows += row.run >= 0 ? 1 : 0;
    std::printf("wrote %s (%zu data rows, %zu aggregate rows)\n", output.c_str(), data_rows,
                rows.size() - data_rows);

    if (with_summary) {
        const std::string summary_path =
            !opt.summary.empty() ? opt.summary : output + ".summary.csv";
        write_file(summary_path, eafs::summary_to_csv(eafs::sweep_report(rows)));
        std::printf("wrote %s\n", summary_path.c_str());
    }
    report_hash(rows);
    print_threshold_summary(rows);
    return kExitOk;
}

void add_scenario_options(CLI::App* cmd, ScenarioOptions& opt, bool with_algorithm) {
    cmd->add_option("--config", opt.config, "scenario config file (key=value lines)");
    cmd->add_option("--id", opt.id, "scenario id used in result rows");
    cmd->add_option("--topology", opt.topology, "adjacency matrix file");
    cmd->add_option("--nodes", opt.nodes, "generator: node count");
    cmd->add_option("--links", opt.links, "generator: directed link count (even)");
    cmd->add_option("--energy-range", opt.energy_range, "generator: arc energy range lo:hi");
    if (with_algorithm) {
        cmd->add_option("--algorithm", opt.algorithm, "ear or meeafs");
    }
    cmd->add_option("--lambda", opt.lambda, "demand rate per ordered node pair");
    cmd->add_option("--thresholds", opt.thresholds,
                    "comma-separated load thresholds in [0,1], or 'grid'");
    cmd->add_option("--runs", opt.runs, "independent runs to average");
    cmd->add_option("--seed", opt.seed, "base seed (required; run r uses seed+r)")
        ->each([&opt](const std::string&) { opt.seed_given = true; });
    cmd->add_option("--mu", opt.mu, "max target utilization for the violation report");
    cmd->add_option("--cost", opt.cost, "routing cost metric: energy or hop");
    cmd->add_option("--output", opt.output, "result CSV path (default results.csv)");
    cmd->add_option("--summary", opt.summary, "summary CSV path (sweep/compare)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy-aware forwarding simulator"};
    app.require_subcommand(1);

    GenerateOptions gen_opt;
    CLI::App* gen = app.add_subcommand("generate", "write a random connected topology file");
    gen->add_option("--nodes", gen_opt.nodes, "node count")->required();
    gen->add_option("--links", gen_opt.links, "directed link count (even)")->required();
    gen->add_option("--energy-range", gen_opt.energy_range, "arc energy range lo:hi");
    gen->add_option("--seed", gen_opt.seed, "generator seed")->required();
    gen->add_option("--output", gen_opt.output, "output file")->required();
    gen->add_option("--capacity", gen_opt.capacity, "uniform arc capacity");

    std::string validate_path;
    CLI::App* val = app.add_subcommand("validate", "check a topology file's invariants");
    val->add_option("path", validate_path, "adjacency matrix file")->required();

    ScenarioOptions run_opt, sweep_opt, compare_opt;
    CLI::App* run = app.add_subcommand("run", "run one algorithm over a threshold list");
    add_scenario_options(run, run_opt, true);
    CLI::App* sweep =
        app.add_subcommand("sweep", "run one algorithm over the full threshold grid");
    add_scenario_options(sweep, sweep_opt, true);
    CLI::App* compare =
        app.add_subcommand("compare", "run EAR and MEEAFS on the same instances");
    add_scenario_options(compare, compare_opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_opt);
        if (val->parsed()) return cmd_validate(validate_path);
        if (run->parsed()) return cmd_run(run_opt, false, false);
        if (sweep->parsed()) return cmd_run(sweep_opt, true, false);
        if (compare->parsed()) return cmd_run(compare_opt, true, true);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const eafs::DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}
