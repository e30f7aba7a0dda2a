#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sparsedom/graph.hpp"
#include "sparsedom/kernel.hpp"
#include "sparsedom/rational.hpp"

namespace sparsedom {

inline constexpr std::uint32_t kUnassigned = kUnreachable;

/// Assignment of every vertex to one landmark. owner[v] indexes `landmarks`.
struct Partition {
    std::vector<Vertex> landmarks;
    std::vector<std::uint32_t> owner;

    Vertex landmark_of(Vertex v) const { return landmarks[owner[v]]; }
    /// Assigned vertices per landmark; unassigned vertices are not counted.
    std::vector<std::int64_t> piece_sizes() const;
};

/// Piece-size statistics; population variance with the mean fixed at
/// (sum of sizes) / (number of pieces).
struct PieceStats {
    std::vector<std::int64_t> sizes;
    Rational mean{0};
    Rational variance{0};
    std::int64_t square_sum = 0;
    double stddev = 0.0;
    double coefficient_of_variation = 0.0;
};

PieceStats piece_stats(std::span<const std::int64_t> sizes);
PieceStats piece_stats(const Partition& p);

/// Greedy over compact-kernel bags in BFS order: each bag joins the smallest
/// piece among its in-neighbor bags' landmarks. Equal sizes are broken by a
/// draw from `seed`. Linear time.
Partition prt_weight(const Graph& g, std::span<const Vertex> landmarks, std::uint64_t seed = 0);

/// Layer by layer balanced assignment via min-cost flow, with current piece
/// sizes as base loads. Exact when every vertex is within distance 1 of L.
Partition prt_layer(const Graph& g, std::span<const Vertex> landmarks);

/// Partial state handed to BranchOptions::on_expand.
struct BranchNode {
    std::span<const std::uint32_t> bag_owner;  // per compact-kernel bag; kUnassigned if open
    std::int64_t partial_square_sum = 0;
    std::int64_t unassigned = 0;
    Rational bound{0};  // partial_square_sum + unassigned^2 / |L|
};

struct BranchOptions {
    std::uint64_t budget = 10'000'000;  // node expansions
    std::uint64_t seed = 0;             // for the prt_weight incumbent
    std::function<void(const BranchNode&)> on_expand;
};

struct BranchResult {
    Partition partition;
    std::int64_t square_sum = 0;
    bool optimal = false;  // search finished inside the budget
    std::uint64_t nodes = 0;
};

/// Exact branch and bound over multi-choice bags, ordered by (layer, bag size
/// descending). A final layer of singleton bags is solved by min-cost flow.
BranchResult prt_branch(const Graph& g, std::span<const Vertex> landmarks, const BranchOptions& options = {});

struct BnpOracleLimits {
    std::size_t max_bags = 12;                // multi-choice bags
    std::uint64_t max_leaves = std::uint64_t{1} << 22;  // product of bag in-degrees
};

/// Calls `visit(bag_owner, sizes)` for every valid neighborhood partitioning,
/// enumerated over compact-kernel bags in BFS order with landmark choices
/// ascending. Throws LimitExceeded past `limits`.
void enumerate_partitions(const CompactKernel& ck,
                          const std::function<void(std::span<const std::uint32_t>, std::span<const std::int64_t>)>& visit,
                          const BnpOracleLimits& limits = {});

/// Minimum square-sum partition by exhaustive enumeration; ties go to the
/// lexicographically smallest owner vector.
Partition brute_force_bnp(const Graph& g, std::span<const Vertex> landmarks, const BnpOracleLimits& limits = {});

/// Expands a per-bag owner vector to a per-vertex Partition.
Partition partition_from_bags(const CompactKernel& ck, std::span<const std::uint32_t> bag_owner);

enum class Violation { none, totality, landmark_conflict, disconnected, distance };

struct PartitionCheck {
    bool ok = false;
    Violation kind = Violation::none;
    Vertex vertex = 0;
    std::string message;
};

const char* violation_name(Violation v);

/// Totality, one landmark per piece, and d_{G[piece]}(v, landmark) = d_G(v, L)
/// for every v (which implies connected pieces). Reports the first violation.
PartitionCheck verify_partition(const Graph& g, std::span<const Vertex> landmarks, const Partition& p);

/// LP-format model with quadratic objective over binaries x_{u,b} for
/// landmark u and compact-kernel bag b.
std::string export_qp(const Graph& g, std::span<const Vertex> landmarks);

}  // namespace sparsedom
