#include "eafs/topology.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "eafs/error.hpp"
#include "eafs/rng.hpp"

namespace eafs {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// BFS over the out-adjacency; presence symmetry makes forward reachability
// equivalent to connectivity of the underlying undirected graph.
int first_unreachable(int node_count, const std::vector<Arc>& arcs,
                      const std::vector<int>& out_offsets) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(node_count), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int a = out_offsets[static_cast<std::size_t>(u)];
             a < out_offsets[static_cast<std::size_t>(u) + 1]; ++a) {
            const int v = arcs[static_cast<std::size_t>(a)].to;
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        }
    }
    for (int v = 0; v < node_count; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) return v;
    }
    return -1;
}

}  // namespace

Topology::Topology(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
    if (node_count_ < 2) {
        throw DataError("topology must have at least 2 nodes, got " +
                        std::to_string(node_count_));
    }
    for (const Arc& a : arcs_) {
        if (a.from < 0 || a.from >= node_count_ || a.to < 0 || a.to >= node_count_) {
            throw DataError("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                            ") has an endpoint outside [0," + std::to_string(node_count_) + ")");
        }
        if (a.from == a.to) {
            throw DataError("self-loop arc at node " + std::to_string(a.from));
        }
        if (!(a.energy > 0.0) || !std::isfinite(a.energy)) {
            throw DataError("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                            ") must have positive finite energy");
        }
        if (!(a.capacity > 0.0) || !std::isfinite(a.capacity)) {
            throw DataError("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                            ") must have positive finite capacity");
        }
    }
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) {
        return x.from != y.from ? x.from < y.from : x.to < y.to;
    });
    for (std::size_t i = 1; i < arcs_.size(); ++i) {
        if (arcs_[i - 1].from == arcs_[i].from && arcs_[i - 1].to == arcs_[i].to) {
            throw DataError("duplicate arc (" + std::to_string(arcs_[i].from) + "," +
                            std::to_string(arcs_[i].to) + ")");
        }
    }

    out_offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
    for (const Arc& a : arcs_) ++out_offsets_[static_cast<std::size_t>(a.from) + 1];
    for (int v = 0; v < node_count_; ++v) {
        out_offsets_[static_cast<std::size_t>(v) + 1] += out_offsets_[static_cast<std::size_t>(v)];
    }

    for (const Arc& a : arcs_) {
        if (arc_index(a.to, a.from) < 0) {
            throw DataError("asymmetric link presence: arc (" + std::to_string(a.from) + "," +
                            std::to_string(a.to) + ") exists but (" + std::to_string(a.to) + "," +
                            std::to_string(a.from) + ") does not");
        }
    }

    const int unreachable = first_unreachable(node_count_, arcs_, out_offsets_);
    if (unreachable >= 0) {
        throw DataError("graph is disconnected: node " + std::to_string(unreachable) +
                        " is unreachable from node 0");
    }

    // implied by connectivity plus symmetric presence, but kept as an
    // explicit invariant of the type
    if (arc_count() < 2 * (node_count_ - 1)) {
        throw DataError("topology has " + std::to_string(arc_count()) +
                        " arcs, fewer than the connectivity floor 2*(|N|-1) = " +
                        std::to_string(2 * (node_count_ - 1)));
    }

    in_arcs_.assign(static_cast<std::size_t>(node_count_), {});
    for (int a = 0; a < arc_count(); ++a) {
        in_arcs_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(a)].to)].push_back(a);
    }
}

int Topology::arc_index(BridgeId from, BridgeId to) const {
    if (from < 0 || from >= node_count_) return -1;
    const int lo = out_offsets_[static_cast<std::size_t>(from)];
    const int hi = out_offsets_[static_cast<std::size_t>(from) + 1];
    auto begin = arcs_.begin() + lo;
    auto end = arcs_.begin() + hi;
    auto it = std::lower_bound(begin, end, to,
                               [](const Arc& a, BridgeId t) { return a.to < t; });
    if (it != end && it->to == to) return static_cast<int>(it - arcs_.begin());
    return -1;
}

std::pair<int, int> Topology::out_arc_range(BridgeId node) const {
    if (node < 0 || node >= node_count_) {
        throw std::invalid_argument("unknown node " + std::to_string(node));
    }
    return {out_offsets_[static_cast<std::size_t>(node)],
            out_offsets_[static_cast<std::size_t>(node) + 1]};
}

const std::vector<int>& Topology::in_arcs(BridgeId node) const {
    if (node < 0 || node >= node_count_) {
        throw std::invalid_argument("unknown node " + std::to_string(node));
    }
    return in_arcs_[static_cast<std::size_t>(node)];
}

int Topology::degree(BridgeId node) const {
    const auto [lo, hi] = out_arc_range(node);
    return hi - lo;
}

std::string Topology::to_matrix_text() const {
    std::vector<double> grid(static_cast<std::size_t>(node_count_) *
                                 static_cast<std::size_t>(node_count_),
                             0.0);
    for (const Arc& a : arcs_) {
        grid[static_cast<std::size_t>(a.from) * static_cast<std::size_t>(node_count_) +
             static_cast<std::size_t>(a.to)] = a.energy;
    }
    std::string out;
    for (int i = 0; i < node_count_; ++i) {
        for (int j = 0; j < node_count_; ++j) {
            if (j > 0) out += ',';
            out += fmt_double(grid[static_cast<std::size_t>(i) *
                                       static_cast<std::size_t>(node_count_) +
                                   static_cast<std::size_t>(j)]);
        }
        out += '\n';
    }
    return out;
}

std::uint64_t Topology::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(node_count_));
    for (const Arc& a : arcs_) {
        mix(static_cast<std::uint64_t>(a.from));
        mix(static_cast<std::uint64_t>(a.to));
        mix(std::bit_cast<std::uint64_t>(a.energy));
        mix(std::bit_cast<std::uint64_t>(a.capacity));
    }
    return h;
}

double incident_energy(const Topology& topology, BridgeId node) {
    const auto [lo, hi] = topology.out_arc_range(node);
    double sum = 0.0;
    for (int a = lo; a < hi; ++a) sum += topology.arc(a).energy;
    return sum;
}

namespace {

// Splits a matrix line into tokens; commas count as separators. Returns
// false for blank and comment lines.
bool tokenize_row(const std::string& line, std::vector<std::string>& tokens) {
    tokens.clear();
    std::string current;
    bool first_char_seen = false;
    for (char c : line) {
        if (!first_char_seen && (c == ' ' || c == '\t' || c == '\r')) continue;
        if (!first_char_seen && c == '#') return false;
        first_char_seen = true;
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        } else {
            current += c;
        }
    }
    if (!current.empty()) tokens.push_back(current);
    return !tokens.empty();
}

struct RawMatrix {
    std::vector<std::vector<double>> rows;
    std::vector<int> line_numbers;  // 1-based source line per row
};

RawMatrix read_matrix(std::istream& text) {
    RawMatrix raw;
    std::string line;
    std::vector<std::string> tokens;
    int line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        if (!tokenize_row(line, tokens)) continue;
        std::vector<double> row;
        row.reserve(tokens.size());
        for (std::size_t c = 0; c < tokens.size(); ++c) {
            const std::string& tok = tokens[c];
            double value = 0.0;
            const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
                throw DataError("line " + std::to_string(line_no) + ": cannot parse '" + tok +
                                "' as a number (row " + std::to_string(raw.rows.size()) +
                                ", col " + std::to_string(c) + ")");
            }
            if (!std::isfinite(value)) {
                throw DataError("line " + std::to_string(line_no) + ": non-finite entry at (" +
                                std::to_string(raw.rows.size()) + "," + std::to_string(c) + ")");
            }
            row.push_back(value);
        }
        raw.rows.push_back(std::move(row));
        raw.line_numbers.push_back(line_no);
    }
    return raw;
}

// Structural checks shared by the loader and the validator. Appends one
// message per violation; positions are 0-based (row, col).
void check_matrix(const RawMatrix& raw, std::vector<std::string>& violations) {
    const std::size_t n = raw.rows.size();
    if (n == 0) {
        violations.push_back("matrix is empty");
        return;
    }
    bool square = true;
    for (std::size_t r = 0; r < n; ++r) {
        if (raw.rows[r].size() != n) {
            violations.push_back("non-square matrix: row " + std::to_string(r) + " has " +
                                 std::to_string(raw.rows[r].size()) + " entries, expected " +
                                 std::to_string(n));
            square = false;
        }
    }
    if (!square) return;
    if (n < 2) {
        violations.push_back("matrix must be at least 2x2");
        return;
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const double v = raw.rows[r][c];
            if (v < 0.0) {
                violations.push_back("negative entry at (" + std::to_string(r) + "," +
                                     std::to_string(c) + ")");
            }
        }
        if (raw.rows[r][r] != 0.0) {
            violations.push_back("nonzero diagonal at (" + std::to_string(r) + "," +
                                 std::to_string(r) + ")");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && raw.rows[i][j] > 0.0 && raw.rows[j][i] == 0.0) {
                violations.push_back("asymmetric link presence at (" + std::to_string(j) + "," +
                                     std::to_string(i) + "): (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") is positive but (" +
                                     std::to_string(j) + "," + std::to_string(i) + ") is zero");
            }
        }
    }
}

std::vector<Arc> matrix_arcs(const RawMatrix& raw, double default_capacity) {
    std::vector<Arc> arcs;
    const std::size_t n = raw.rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && raw.rows[i][j] > 0.0) {
                arcs.push_back(Arc{static_cast<BridgeId>(i), static_cast<BridgeId>(j),
                                   raw.rows[i][j], default_capacity});
            }
        }
    }
    return arcs;
}

}  // namespace

Topology load_adjacency_matrix(std::istream& text, double default_capacity) {
    if (!(default_capacity > 0.0)) {
        throw std::invalid_argument("default capacity must be positive");
    }
    RawMatrix raw = read_matrix(text);
    std::vector<std::string> violations;
    check_matrix(raw, violations);
    if (!violations.empty()) throw DataError(violations.front());
    return Topology(static_cast<int>(raw.rows.size()), matrix_arcs(raw, default_capacity));
}

Topology load_adjacency_matrix_file(const std::string& path, double default_capacity) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open topology file '" + path + "'");
    return load_adjacency_matrix(in, default_capacity);
}

MatrixCheck validate_matrix_text(std::istream& text) {
    MatrixCheck check;
    RawMatrix raw;
    try {
        raw = read_matrix(text);
    } catch (const DataError& e) {
        check.violations.push_back(e.what());
        return check;
    }
    check_matrix(raw, check.violations);
    if (!check.violations.empty()) return check;

    check.nodes = static_cast<int>(raw.rows.size());
    try {
        const Topology topo(check.nodes, matrix_arcs(raw, 1.0));
        check.arcs = topo.arc_count();
        check.connected = true;
        check.ok = true;
    } catch (const DataError& e) {
        // arc count is still reportable when only connectivity failed
        int arcs = 0;
        for (const auto& row : raw.rows) {
            for (double v : row) arcs += v > 0.0 ? 1 : 0;
        }
        check.arcs = arcs;
        check.violations.push_back(e.what());
    }
    return check;
}

Topology generate_random_topology(int nodes, int directed_links, double energy_lo,
                                  double energy_hi, std::uint64_t seed,
                                  double default_capacity) {
    if (nodes < 2) throw std::invalid_argument("nodes must be >= 2");
    if (directed_links % 2 != 0) {
        throw std::invalid_argument("directed_links must be even (arcs come in symmetric pairs)");
    }
    if (directed_links < 2 * (nodes - 1)) {
        throw std::invalid_argument("infeasible: " + std::to_string(directed_links) +
                                    " links cannot connect " + std::to_string(nodes) +
                                    " nodes (minimum is " + std::to_string(2 * (nodes - 1)) + ")");
    }
    if (static_cast<long long>(directed_links) >
        static_cast<long long>(nodes) * (nodes - 1)) {
        throw std::invalid_argument("infeasible: " + std::to_string(directed_links) +
                                    " links exceed the maximum " +
                                    std::to_string(static_cast<long long>(nodes) * (nodes - 1)) +
                                    " for " + std::to_string(nodes) + " nodes");
    }
    if (!(energy_lo > 0.0) || energy_hi < energy_lo) {
        throw std::invalid_argument("energy range must satisfy 0 < lo <= hi");
    }

    Rng rng(seed);
    const std::size_t un = static_cast<std::size_t>(nodes);

    // Uniform spanning tree of the complete graph via a random Pruefer
    // sequence (bijective with labeled trees).
    std::vector<std::pair<int, int>> tree_edges;
    tree_edges.reserve(un - 1);
    if (nodes == 2) {
        tree_edges.emplace_back(0, 1);
    } else {
        std::vector<int> seq(un - 2);
        for (int& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(nodes)));
        std::vector<int> degree(un, 1);
        for (int s : seq) ++degree[static_cast<std::size_t>(s)];
        std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
        for (int v = 0; v < nodes; ++v) {
            if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
        }
        for (int s : seq) {
            const int leaf = leaves.top();
            leaves.pop();
            tree_edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
            if (--degree[static_cast<std::size_t>(s)] == 1) leaves.push(s);
        }
        const int u = leaves.top();
        leaves.pop();
        const int v = leaves.top();
        tree_edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    std::vector<std::uint8_t> present(un * un, 0);
    for (const auto& [i, j] : tree_edges) {
        present[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = 1;
    }

    const int extra_pairs = (directed_links - 2 * (nodes - 1)) / 2;
    if (extra_pairs > 0) {
        std::vector<std::pair<int, int>> absent;
        absent.reserve(un * (un - 1) / 2 - (un - 1));
        for (int i = 0; i < nodes; ++i) {
            for (int j = i + 1; j < nodes; ++j) {
                if (!present[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)]) {
                    absent.emplace_back(i, j);
                }
            }
        }
        rng.shuffle(absent);
        for (int k = 0; k < extra_pairs; ++k) tree_edges.push_back(absent[static_cast<std::size_t>(k)]);
    }

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(directed_links));
    for (const auto& [i, j] : tree_edges) {
        arcs.push_back(Arc{i, j, 1.0, default_capacity});
        arcs.push_back(Arc{j, i, 1.0, default_capacity});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
        return x.from != y.from ? x.from < y.from : x.to < y.to;
    });
    // energies assigned in canonical arc order, independent per direction
    for (Arc& a : arcs) a.energy = rng.uniform(energy_lo, energy_hi);

    return Topology(nodes, std::move(arcs));
}

}  // namespace eafs
