#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsedom/graph.hpp"
#include "sparsedom/rational.hpp"

namespace sparsedom {

/// An r-dominating set together with its average r-congestion.
struct DominatorSet {
    Radius radius = 1;
    std::vector<Vertex> members;  // sorted ascending
    Rational avg_congestion{0};

    std::size_t size() const { return members.size(); }
};

enum class GreedyStrategy { degree, ratio };
enum class TieBreak { none, ratio, degree };

/// Selects one of the four greedy variants.
///
/// degree picks the vertex covering the most undominated vertices, ratio the
/// vertex with the largest undominated fraction of its r-neighborhood. A "+"
/// variant breaks primary ties with the other criterion. Whatever ties remain
/// are resolved by a random vertex ranking drawn from `seed`, unless
/// `tie_order` is given, in which case lower tie_order[v] wins.
struct GreedyConfig {
    GreedyStrategy strategy = GreedyStrategy::ratio;
    TieBreak tiebreak = TieBreak::degree;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> tie_order;

    /// "degree", "degree+", "ratio" or "ratio+". Throws ArgumentError otherwise.
    static GreedyConfig named(std::string_view algorithm, std::uint64_t seed = 0);
    std::string name() const;
    /// Throws ArgumentError on a mismatched strategy/tiebreak pairing.
    void validate() const;
};

/// |N^r[v] ∩ S|.
std::size_t congestion_at(const Graph& g, std::span<const Vertex> s, Radius r, Vertex v);

/// Per-vertex congestion for every vertex at once.
std::vector<std::size_t> congestion_profile(const Graph& g, std::span<const Vertex> s, Radius r);

/// (1/n) * sum over u in S of |N^r[u]|, exactly.
Rational avg_congestion(const Graph& g, std::span<const Vertex> s, Radius r);

DominatorSet greedy_dominate(const Graph& g, Radius r, const GreedyConfig& cfg);

struct DominationCheck {
    bool ok = false;
    std::optional<Vertex> witness;  // first undominated vertex when !ok
};

DominationCheck verify_r_domination(const Graph& g, std::span<const Vertex> s, Radius r);

struct PerfectCodeCheck {
    bool ok = false;
    std::optional<Vertex> witness;  // first vertex whose congestion is not 1
    std::size_t witness_congestion = 0;
};

PerfectCodeCheck is_perfect_code(const Graph& g, std::span<const Vertex> s, Radius r);

/// Default vertex limit of the exhaustive oracles. The SPARSEDOM_BRUTE_LIMIT
/// environment variable overrides it.
std::size_t default_brute_force_limit();

/// Minimum-cardinality r-dominating set; lexicographically smallest among the
/// minimum ones. Throws LimitExceeded when n > limit.
DominatorSet brute_force_mds(const Graph& g, Radius r, std::size_t limit = default_brute_force_limit());

/// Minimum average r-congestion r-dominating set; ties go to smaller size, then
/// lexicographically smaller member list. Throws LimitExceeded when n > limit.
DominatorSet brute_force_mcds(const Graph& g, Radius r, std::size_t limit = default_brute_force_limit());

/// Drops members of a dominating set in ascending id order while the rest still
/// r-dominates. Throws ArgumentError if `s` does not dominate.
std::vector<Vertex> minimalize_dominating_set(const Graph& g, std::span<const Vertex> s, Radius r);

enum class IlpObjective { size, congestion };

/// LP-format model of minimum (weighted) r-domination.
std::string export_ilp(const Graph& g, Radius r, IlpObjective objective);

/// Sorted, deduplicated copy; throws ArgumentError on ids >= n.
std::vector<Vertex> canonical_vertex_set(const Graph& g, std::span<const Vertex> s);

}  // namespace sparsedom
