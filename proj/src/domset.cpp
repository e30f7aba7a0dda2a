#include "sparsedom/domset.hpp"

#include <algorithm>
#include <queue>

#include "sparsedom/errors.hpp"
#include "sparsedom/rng.hpp"

namespace sparsedom {

GreedyConfig GreedyConfig::named(std::string_view algorithm, std::uint64_t seed) {
    GreedyConfig cfg;
    cfg.seed = seed;
    if (algorithm == "degree") {
        cfg.strategy = GreedyStrategy::degree;
        cfg.tiebreak = TieBreak::none;
    } else if (algorithm == "degree+") {
        cfg.strategy = GreedyStrategy::degree;
        cfg.tiebreak = TieBreak::ratio;
    } else if (algorithm == "ratio") {
        cfg.strategy = GreedyStrategy::ratio;
        cfg.tiebreak = TieBreak::none;
    } else if (algorithm == "ratio+") {
        cfg.strategy = GreedyStrategy::ratio;
        cfg.tiebreak = TieBreak::degree;
    } else {
        throw ArgumentError("unknown greedy algorithm '" + std::string(algorithm) + "'");
    }
    return cfg;
}

std::string GreedyConfig::name() const {
    std::string base = strategy == GreedyStrategy::degree ? "degree" : "ratio";
    return tiebreak == TieBreak::none ? base : base + "+";
}

void GreedyConfig::validate() const {
    bool ok = strategy == GreedyStrategy::degree ? tiebreak != TieBreak::degree
                                                 : tiebreak != TieBreak::ratio;
    if (!ok) throw ArgumentError("tie-break criterion must differ from the primary criterion");
}

std::vector<Vertex> canonical_vertex_set(const Graph& g, std::span<const Vertex> s) {
    std::vector<Vertex> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty() && out.back() >= g.num_vertices()) {
        throw ArgumentError("vertex id " + std::to_string(out.back()) + " out of range");
    }
    return out;
}

std::size_t congestion_at(const Graph& g, std::span<const Vertex> s, Radius r, Vertex v) {
    if (v >= g.num_vertices()) throw ArgumentError("vertex id out of range");
    std::vector<char> in_set(g.num_vertices(), 0);
    for (Vertex u : canonical_vertex_set(g, s)) in_set[u] = 1;
    BallScanner scanner(g);
    std::size_t count = 0;
    scanner.for_each(v, r, [&](Vertex u) { count += in_set[u] ? 1 : 0; });
    return count;
}

std::vector<std::size_t> congestion_profile(const Graph& g, std::span<const Vertex> s, Radius r) {
    std::vector<std::size_t> count(g.num_vertices(), 0);
    BallScanner scanner(g);
    for (Vertex u : canonical_vertex_set(g, s)) {
        scanner.for_each(u, r, [&](Vertex x) { ++count[x]; });
    }
    return count;
}

Rational avg_congestion(const Graph& g, std::span<const Vertex> s, Radius r) {
    if (g.num_vertices() == 0) return Rational(0);
    BallScanner scanner(g);
    std::int64_t total = 0;
    for (Vertex u : canonical_vertex_set(g, s)) {
        total += static_cast<std::int64_t>(scanner.ball_size(u, r));
    }
    return Rational(total, static_cast<std::int64_t>(g.num_vertices()));
}

namespace {

struct HeapEntry {
    Vertex v;
    std::uint32_t undominated;
};

class GreedyOrder {
public:
    GreedyOrder(const GreedyConfig& cfg, const std::vector<std::uint32_t>& ball,
                const std::vector<std::uint32_t>& rank)
        : cfg_(cfg), ball_(ball), rank_(rank) {}

    // Strict weak ordering for a max-heap: true when a ranks below b.
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        int primary = cfg_.strategy == GreedyStrategy::degree ? by_count(a, b) : by_ratio(a, b);
        if (primary != 0) return primary < 0;
        int secondary = 0;
        if (cfg_.tiebreak == TieBreak::ratio) secondary = by_ratio(a, b);
        if (cfg_.tiebreak == TieBreak::degree) secondary = by_count(a, b);
        if (secondary != 0) return secondary < 0;
        return rank_[a.v] > rank_[b.v];
    }

private:
    static int by_count(const HeapEntry& a, const HeapEntry& b) {
        return a.undominated < b.undominated ? -1 : (a.undominated > b.undominated ? 1 : 0);
    }
    int by_ratio(const HeapEntry& a, const HeapEntry& b) const {
        auto lhs = std::uint64_t{a.undominated} * ball_[b.v];
        auto rhs = std::uint64_t{b.undominated} * ball_[a.v];
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }

    const GreedyConfig& cfg_;
    const std::vector<std::uint32_t>& ball_;
    const std::vector<std::uint32_t>& rank_;
};

}  // namespace

DominatorSet greedy_dominate(const Graph& g, Radius r, const GreedyConfig& cfg) {
    if (r == 0) throw ArgumentError("greedy_dominate: radius must be at least 1");
    cfg.validate();
    const std::size_t n = g.num_vertices();

    std::vector<std::uint32_t> rank;
    if (!cfg.tie_order.empty()) {
        if (cfg.tie_order.size() != n) throw ArgumentError("tie_order must rank every vertex");
        rank = cfg.tie_order;
    } else {
        Rng rng(cfg.seed);
        auto perm = rng.permutation(n);
        rank.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) rank[perm[i]] = i;
    }

    BallScanner scanner(g);
    std::vector<std::uint32_t> ball(n);
    for (Vertex v = 0; v < n; ++v) ball[v] = static_cast<std::uint32_t>(scanner.ball_size(v, r));
    std::vector<std::uint32_t> undominated = ball;
    std::vector<char> dominated(n, 0);
    std::size_t remaining = n;

    GreedyOrder order(cfg, ball, rank);
    std::vector<HeapEntry> storage;
    storage.reserve(n);
    for (Vertex v = 0; v < n; ++v) storage.push_back({v, undominated[v]});
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, GreedyOrder> heap(order, std::move(storage));

    DominatorSet result;
    result.radius = r;
    std::int64_t weight = 0;
    std::vector<Vertex> newly;
    while (remaining > 0) {
        HeapEntry top = heap.top();
        heap.pop();
        std::uint32_t current = undominated[top.v];
        if (current == 0) continue;
        if (current != top.undominated) {
            // Keys only ever decrease, so a stale entry is re-queued at its true key.
            heap.push({top.v, current});
            continue;
        }

        Vertex v = top.v;
        result.members.push_back(v);
        weight += ball[v];
        newly.clear();
        scanner.for_each(v, r, [&](Vertex u) {
            if (!dominated[u]) newly.push_back(u);
        });
        for (Vertex u : newly) {
            dominated[u] = 1;
            --remaining;
            scanner.for_each(u, r, [&](Vertex x) { --undominated[x]; });
        }
    }

    std::sort(result.members.begin(), result.members.end());
    result.avg_congestion = n == 0 ? Rational(0) : Rational(weight, static_cast<std::int64_t>(n));
    return result;
}

DominationCheck verify_r_domination(const Graph& g, std::span<const Vertex> s, Radius r) {
    auto set = canonical_vertex_set(g, s);
    DominationCheck check;
    if (set.empty()) {
        check.ok = g.num_vertices() == 0;
        if (!check.ok) check.witness = 0;
        return check;
    }
    DistanceField field = multi_source_bfs(g, set);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (field.dist[v] > r) {
            check.witness = v;
            return check;
        }
    }
    check.ok = true;
    return check;
}

PerfectCodeCheck is_perfect_code(const Graph& g, std::span<const Vertex> s, Radius r) {
    auto count = congestion_profile(g, s, r);
    PerfectCodeCheck check;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (count[v] != 1) {
            check.witness = v;
            check.witness_congestion = count[v];
            return check;
        }
    }
    check.ok = true;
    return check;
}

std::vector<Vertex> minimalize_dominating_set(const Graph& g, std::span<const Vertex> s, Radius r) {
    auto set = canonical_vertex_set(g, s);
    if (!verify_r_domination(g, set, r).ok) {
        throw ArgumentError("minimalize_dominating_set: input set does not r-dominate");
    }
    auto count = congestion_profile(g, set, r);
    BallScanner scanner(g);
    std::vector<Vertex> kept;
    // Removal only lowers counts, so a vertex kept once stays necessary.
    for (Vertex v : set) {
        bool removable = true;
        scanner.for_each(v, r, [&](Vertex x) { removable = removable && count[x] >= 2; });
        if (removable) {
            scanner.for_each(v, r, [&](Vertex x) { --count[x]; });
        } else {
            kept.push_back(v);
        }
    }
    return kept;
}

}  // namespace sparsedom
