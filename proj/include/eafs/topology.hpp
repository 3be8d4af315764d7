#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace eafs {

// Nodes are dense integer ids in [0, node_count).
using BridgeId = int;

// One directed link. Physical links are modeled as two independent arcs,
// one per direction, each with its own energy weight.
struct Arc {
    BridgeId from{};
    BridgeId to{};
    double energy{1.0};    // energy impact of keeping this direction powered
    double capacity{1.0};  // traffic units
};

// Immutable directed graph of bridges and arcs.
//
// Invariants enforced at construction:
//   - node_count >= 2, every arc endpoint in range, from != to
//   - energy > 0 and capacity > 0 on every arc
//   - no duplicate (from, to) pairs
//   - arc presence is symmetric: (i,j) exists iff (j,i) exists
//   - the graph is connected
//   - arc_count >= 2 * (node_count - 1)
//
// Arcs are stored sorted by (from, to), so ascending arc index is the
// canonical deterministic processing order used throughout the library.
class Topology {
public:
    Topology(int node_count, std::vector<Arc> arcs);

    int node_count() const { return node_count_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int index) const { return arcs_[static_cast<std::size_t>(index)]; }

    // Index of arc (from, to), or -1 if absent.
    int arc_index(BridgeId from, BridgeId to) const;

    // Outgoing arc indices of `node` form the contiguous range
    // [first, second); they are sorted by destination id.
    std::pair<int, int> out_arc_range(BridgeId node) const;

    // Arc indices entering `node` (sorted ascending).
    const std::vector<int>& in_arcs(BridgeId node) const;

    // Number of neighbors (equals the out-degree; presence is symmetric).
    int degree(BridgeId node) const;

    // Dense n x n matrix text, comma separated, shortest round-trip decimals.
    std::string to_matrix_text() const;

    // FNV-1a over node count and the exact arc list (bit patterns included),
    // for cross-checking that two result files used the same instance.
    std::uint64_t hash() const;

private:
    int node_count_{};
    std::vector<Arc> arcs_;          // sorted by (from, to)
    std::vector<int> out_offsets_;   // CSR offsets into arcs_
    std::vector<std::vector<int>> in_arcs_;
};

// Sum of energy over the outgoing arcs of `node` (the per-bridge power
// consumption weight used by the energy-based exporter election).
double incident_energy(const Topology& topology, BridgeId node);

// Parses a weighted adjacency matrix: one row per line, comma- or
// whitespace-separated non-negative decimals, '#' comment lines allowed.
// Entry (i,j) > 0 declares arc i->j with that energy; the diagonal must be
// zero and presence must be symmetric. Positions in error messages are
// 0-based (row, col). Capacities are set to `default_capacity`.
Topology load_adjacency_matrix(std::istream& text, double default_capacity = 1.0);
Topology load_adjacency_matrix_file(const std::string& path, double default_capacity = 1.0);

// Non-throwing variant for the `validate` CLI: collects every violation it
// can find instead of stopping at the first.
struct MatrixCheck {
    bool ok{false};
    int nodes{0};
    int arcs{0};
    bool connected{false};
    std::vector<std::string> violations;
};
MatrixCheck validate_matrix_text(std::istream& text);

// Random connected topology: a uniformly random spanning tree (both
// directions of each tree edge) plus uniformly random absent symmetric arc
// pairs until `directed_links` arcs exist. Energies are drawn uniformly from
// [energy_lo, energy_hi] per arc. Deterministic for a fixed seed.
Topology generate_random_topology(int nodes, int directed_links, double energy_lo,
                                  double energy_hi, std::uint64_t seed,
                                  double default_capacity = 1.0);

}  // namespace eafs
