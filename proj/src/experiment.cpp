#include "eafs/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "eafs/ear.hpp"
#include "eafs/error.hpp"
#include "eafs/meeafs.hpp"
#include "eafs/metrics.hpp"
#include "eafs/rng.hpp"
#include "eafs/traffic.hpp"

namespace eafs {

namespace {

constexpr std::uint64_t kTopologyStream = 0x746f706f;  // distinct seed streams per run
constexpr std::uint64_t kDemandStream = 0x64656d64;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values, double mean) {
    if (values.size() < 2) return 0.0;
    double sum_sq = 0.0;
    for (double v : values) sum_sq += (v - mean) * (v - mean);
    return std::sqrt(sum_sq / static_cast<double>(values.size() - 1));
}

}  // namespace

const char* algorithm_name(Algorithm algorithm) {
    return algorithm == Algorithm::ear ? "ear" : "meeafs";
}

std::vector<double> default_threshold_grid() {
    std::vector<double> grid;
    grid.reserve(21);
    for (int i = 0; i <= 20; ++i) grid.push_back(static_cast<double>(i) / 20.0);
    return grid;
}

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

void validate_scenario(const Scenario& sc, const std::vector<double>& thresholds) {
    if (!sc.seed_set) {
        throw std::invalid_argument("scenario '" + sc.id +
                                    "': an explicit seed is required for reproducibility");
    }
    if (sc.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (sc.lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
    if (!(sc.mu > 0.0) || sc.mu > 1.0) throw std::invalid_argument("mu must be in (0, 1]");
    if (sc.topology_path.has_value() == sc.generator.has_value()) {
        throw std::invalid_argument(
            "scenario needs exactly one topology source: a file or a generator spec");
    }
    for (double th : thresholds) {
        if (th < 0.0 || th > 1.0) {
            throw std::invalid_argument("threshold " + format_double(th) + " outside [0, 1]");
        }
    }
}

struct RunOutcome {
    MetricsReport report;
    double violations{};
    double wall_ms{};
};

}  // namespace

std::vector<ResultRow> run_scenario(const Scenario& scenario) {
    std::vector<double> thresholds =
        scenario.thresholds.empty() ? default_threshold_grid() : scenario.thresholds;
    std::sort(thresholds.begin(), thresholds.end());
    validate_scenario(scenario, thresholds);

    std::optional<Topology> file_topology;
    if (scenario.topology_path) {
        file_topology = load_adjacency_matrix_file(*scenario.topology_path);
    }

    const std::size_t run_count = static_cast<std::size_t>(scenario.runs);
    const std::size_t th_count = thresholds.size();
    // outcome[t][r]
    std::vector<std::vector<RunOutcome>> outcome(th_count, std::vector<RunOutcome>(run_count));
    std::vector<std::uint64_t> run_seed(run_count);
    std::vector<std::uint64_t> run_hash(run_count);

    for (std::size_t r = 0; r < run_count; ++r) {
        run_seed[r] = scenario.base_seed + r;
        Topology topology =
            file_topology
                ? *file_topology
                : generate_random_topology(scenario.generator->nodes, scenario.generator->links,
                                           scenario.generator->energy_lo,
                                           scenario.generator->energy_hi,
                                           mix_seed(run_seed[r], kTopologyStream));
        run_hash[r] = topology.hash();
        const DemandSet demands =
            generate_demands(topology, scenario.lambda, mix_seed(run_seed[r], kDemandStream));

        if (scenario.algorithm == Algorithm::ear) {
            const double t0 = now_ms();
            const PruneResult result = run_ear(topology, scenario.cost);
            const LoadMap loads = route_demands(topology, result.active, demands, scenario.cost);
            const double wall = now_ms() - t0;
            RunOutcome out;
            out.report = compute_report(topology, result, loads);
            out.violations =
                static_cast<double>(check_utilization(loads, topology, scenario.mu).size());
            out.wall_ms = wall;
            for (std::size_t t = 0; t < th_count; ++t) outcome[t][r] = out;
        } else {
            const double t0 = now_ms();
            const MeeafsPlan plan = plan_meeafs(topology, demands, scenario.cost);
            const double plan_ms = now_ms() - t0;
            for (std::size_t t = 0; t < th_count; ++t) {
                const double t1 = now_ms();
                const PruneResult result =
                    apply_threshold(topology, demands, plan, thresholds[t], scenario.cost);
                RunOutcome& out = outcome[t][r];
                out.report = compute_report(topology, result, result.final_loads);
                out.violations = static_cast<double>(
                    check_utilization(result.final_loads, topology, scenario.mu).size());
                out.wall_ms = plan_ms + (now_ms() - t1);
            }
        }
    }

    const bool constant_hash =
        std::all_of(run_hash.begin(), run_hash.end(),
                    [&](std::uint64_t h) { return h == run_hash.front(); });

    std::vector<ResultRow> rows;
    rows.reserve(th_count * (run_count + 1));
    for (std::size_t t = 0; t < th_count; ++t) {
        std::vector<double> sigmas, rhos, fis;
        sigmas.reserve(run_count);
        rhos.reserve(run_count);
        fis.reserve(run_count);
        ResultRow agg;
        agg.scenario_id = scenario.id;
        agg.algorithm = algorithm_name(scenario.algorithm);
        agg.lambda = scenario.lambda;
        agg.threshold = thresholds[t];
        agg.run = -1;
        agg.topology_hash = constant_hash ? run_hash.front() : 0;

        for (std::size_t r = 0; r < run_count; ++r) {
            const RunOutcome& out = outcome[t][r];
            ResultRow row;
            row.scenario_id = scenario.id;
            row.algorithm = agg.algorithm;
            row.lambda = scenario.lambda;
            row.threshold = thresholds[t];
            row.run = static_cast<int>(r);
            row.seed = run_seed[r];
            row.topology_hash = run_hash[r];
            row.sigma = out.report.sigma_percent;
            row.rho = out.report.rho_percent;
            row.fairness = out.report.fairness;
            row.energy_on = out.report.energy_on;
            row.active_count = out.report.active_count;
            row.off_count = out.report.off_count;
            row.max_utilization = out.report.max_utilization;
            row.violations = out.violations;
            row.wall_time_ms = out.wall_ms;
            sigmas.push_back(row.sigma);
            rhos.push_back(row.rho);
            fis.push_back(row.fairness);
            agg.energy_on += row.energy_on / static_cast<double>(run_count);
            agg.active_count += row.active_count / static_cast<double>(run_count);
            agg.off_count += row.off_count / static_cast<double>(run_count);
            agg.max_utilization += row.max_utilization / static_cast<double>(run_count);
            agg.violations += row.violations / static_cast<double>(run_count);
            agg.wall_time_ms += row.wall_time_ms;
            rows.push_back(std::move(row));
        }
        agg.sigma = mean_of(sigmas);
        agg.rho = mean_of(rhos);
        agg.fairness = mean_of(fis);
        agg.sigma_std = sample_std(sigmas, agg.sigma);
        agg.rho_std = sample_std(rhos, agg.rho);
        agg.fairness_std = sample_std(fis, agg.fairness);
        rows.push_back(std::move(agg));
    }
    return rows;
}

namespace {

std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace

std::string rows_to_csv(std::span<const ResultRow> rows) {
    std::string out =
        "scenario,algorithm,lambda,threshold,run,seed,topology_hash,sigma,rho,fairness,"
        "energy_on,active_count,off_count,max_utilization,violations,"
        "sigma_std,rho_std,fairness_std\n";
    for (const ResultRow& row : rows) {
        const bool aggregate = row.run < 0;
        out += row.scenario_id;
        out += ',';
        out += row.algorithm;
        out += ',';
        out += format_double(row.lambda);
        out += ',';
        out += format_double(row.threshold);
        out += ',';
        out += aggregate ? "mean" : std::to_string(row.run);
        out += ',';
        if (!aggregate) out += std::to_string(row.seed);
        out += ',';
        if (row.topology_hash != 0) out += hash_hex(row.topology_hash);
        out += ',';
        out += format_double(row.sigma);
        out += ',';
        out += format_double(row.rho);
        out += ',';
        out += format_double(row.fairness);
        out += ',';
        out += format_double(row.energy_on);
        out += ',';
        out += format_double(row.active_count);
        out += ',';
        out += format_double(row.off_count);
        out += ',';
        out += format_double(row.max_utilization);
        out += ',';
        out += format_double(row.violations);
        out += ',';
        if (aggregate) out += format_double(row.sigma_std);
        out += ',';
        if (aggregate) out += format_double(row.rho_std);
        out += ',';
        if (aggregate) out += format_double(row.fairness_std);
        out += '\n';
    }
    return out;
}

std::vector<SummaryRow> sweep_report(std::span<const ResultRow> rows) {
    std::map<std::tuple<std::string, double, double>, std::pair<int, SummaryRow>> groups;
    for (const ResultRow& row : rows) {
        if (row.run < 0) continue;  // aggregates are recomputed, not reused
        auto key = std::make_tuple(row.algorithm, row.lambda, row.threshold);
        auto& [count, summary] = groups[key];
        if (count == 0) {
            summary.algorithm = row.algorithm;
            summary.lambda = row.lambda;
            summary.threshold = row.threshold;
        }
        ++count;
        summary.sigma_mean += row.sigma;
        summary.rho_mean += row.rho;
        summary.fairness_mean += row.fairness;
    }
    std::vector<SummaryRow> result;
    result.reserve(groups.size());
    for (auto& [key, entry] : groups) {
        auto& [count, summary] = entry;
        summary.sigma_mean /= count;
        summary.rho_mean /= count;
        summary.fairness_mean /= count;
        result.push_back(std::move(summary));
    }
    return result;
}

std::string summary_to_csv(std::span<const SummaryRow> rows) {
    std::string out = "algorithm,lambda,threshold,sigma,rho,fairness\n";
    for (const SummaryRow& row : rows) {
        out += row.algorithm;
        out += ',';
        out += format_double(row.lambda);
        out += ',';
        out += format_double(row.threshold);
        out += ',';
        out += format_double(row.sigma_mean);
        out += ',';
        out += format_double(row.rho_mean);
        out += ',';
        out += format_double(row.fairness_mean);
        out += '\n';
    }
    return out;
}

namespace {

double parse_double_or_throw(const std::string& value, int line_no) {
    double out = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        throw DataError("config line " + std::to_string(line_no) + ": '" + value +
                        "' is not a number");
    }
    return out;
}

long long parse_int_or_throw(const std::string& value, int line_no) {
    long long out = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        throw DataError("config line " + std::to_string(line_no) + ": '" + value +
                        "' is not an integer");
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<double> parse_threshold_list(const std::string& value) {
    if (value == "grid") return default_threshold_grid();
    std::vector<double> out;
    std::string token;
    std::stringstream ss(value);
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        double th = 0.0;
        const auto res = std::from_chars(token.data(), token.data() + token.size(), th);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
            throw DataError("'" + token + "' is not a number in the threshold list");
        }
        out.push_back(th);
    }
    if (out.empty()) throw DataError("empty threshold list");
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<double, double> parse_range(const std::string& value) {
    const std::size_t colon = value.find(':');
    if (colon == std::string::npos) {
        throw DataError("range '" + value + "' must be of the form lo:hi");
    }
    const std::string lo = trim(value.substr(0, colon));
    const std::string hi = trim(value.substr(colon + 1));
    double lov = 0.0, hiv = 0.0;
    auto r1 = std::from_chars(lo.data(), lo.data() + lo.size(), lov);
    auto r2 = std::from_chars(hi.data(), hi.data() + hi.size(), hiv);
    if (r1.ec != std::errc() || r1.ptr != lo.data() + lo.size() || r2.ec != std::errc() ||
        r2.ptr != hi.data() + hi.size()) {
        throw DataError("range '" + value + "' must be of the form lo:hi");
    }
    return {lov, hiv};
}

ScenarioConfig parse_scenario_config(std::istream& text) {
    ScenarioConfig config;
    Scenario& sc = config.scenario;
    GeneratorSpec gen;
    bool gen_seen = false;

    std::string line;
    int line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw DataError("config line " + std::to_string(line_no) +
                            ": expected key=value, got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (value.empty()) {
            throw DataError("config line " + std::to_string(line_no) + ": key '" + key +
                            "' has no value");
        }

        if (key == "id") {
            sc.id = value;
        } else if (key == "topology") {
            sc.topology_path = value;
        } else if (key == "nodes") {
            gen.nodes = static_cast<int>(parse_int_or_throw(value, line_no));
            gen_seen = true;
        } else if (key == "links") {
            gen.links = static_cast<int>(parse_int_or_throw(value, line_no));
            gen_seen = true;
        } else if (key == "energy_range") {
            try {
                std::tie(gen.energy_lo, gen.energy_hi) = parse_range(value);
            } catch (const DataError& e) {
                throw DataError("config line " + std::to_string(line_no) + ": " + e.what());
            }
            gen_seen = true;
        } else if (key == "algorithm") {
            if (value == "ear") {
                sc.algorithm = Algorithm::ear;
            } else if (value == "meeafs") {
                sc.algorithm = Algorithm::meeafs;
            } else {
                throw DataError("config line " + std::to_string(line_no) +
                                ": algorithm must be 'ear' or 'meeafs', got '" + value + "'");
            }
        } else if (key == "lambda") {
            sc.lambda = parse_double_or_throw(value, line_no);
        } else if (key == "thresholds") {
            try {
                sc.thresholds = parse_threshold_list(value);
            } catch (const DataError& e) {
                throw DataError("config line " + std::to_string(line_no) + ": " + e.what());
            }
        } else if (key == "runs") {
            sc.runs = static_cast<int>(parse_int_or_throw(value, line_no));
        } else if (key == "seed") {
            sc.base_seed = static_cast<std::uint64_t>(parse_int_or_throw(value, line_no));
            sc.seed_set = true;
        } else if (key == "mu") {
            sc.mu = parse_double_or_throw(value, line_no);
        } else if (key == "cost") {
            if (value == "energy") {
                sc.cost = CostMetric::energy;
            } else if (value == "hop") {
                sc.cost = CostMetric::hop;
            } else {
                throw DataError("config line " + std::to_string(line_no) +
                                ": cost must be 'energy' or 'hop', got '" + value + "'");
            }
        } else if (key == "output") {
            config.output = value;
        } else {
            throw DataError("config line " + std::to_string(line_no) + ": unknown key '" + key +
                            "'");
        }
    }

    if (gen_seen) sc.generator = gen;
    return config;
}

ScenarioConfig parse_scenario_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file '" + path + "'");
    return parse_scenario_config(in);
}

}  // namespace eafs
