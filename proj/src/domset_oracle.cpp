#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include "sparsedom/domset.hpp"
#include "sparsedom/errors.hpp"

namespace sparsedom {

std::size_t default_brute_force_limit() {
    if (const char* env = std::getenv("SPARSEDOM_BRUTE_LIMIT")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw ArgumentError(std::string("SPARSEDOM_BRUTE_LIMIT is not a number: ") + env);
        }
    }
    return 24;
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

void check_limit(const Graph& g, std::size_t limit, const char* who) {
    std::size_t n = g.num_vertices();
    if (n > limit || n > kMaskBits) {
        throw LimitExceeded(std::string(who) + ": " + std::to_string(n) +
                            " vertices exceeds the exhaustive search limit of " +
                            std::to_string(std::min(limit, kMaskBits)));
    }
}

std::vector<Mask> ball_masks(const Graph& g, Radius r) {
    BallScanner scanner(g);
    std::vector<Mask> masks(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        scanner.for_each(v, r, [&](Vertex u) { masks[v] |= Mask{1} << u; });
    }
    return masks;
}

Mask full_mask(std::size_t n) { return n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

// Fixed-size subsets in lexicographic order; the first dominating one wins.
class SizedSearch {
public:
    SizedSearch(const std::vector<Mask>& balls, Mask full) : balls_(balls), full_(full) {}

    bool run(std::size_t k) {
        chosen_.clear();
        return extend(0, k, 0);
    }
    const std::vector<Vertex>& chosen() const { return chosen_; }

private:
    bool extend(std::size_t next, std::size_t k, Mask covered) {
        if (covered == full_) return true;
        if (chosen_.size() == k) return false;
        // The smallest undominated vertex needs a dominator among ids >= next.
        auto u = static_cast<std::size_t>(std::countr_zero(~covered & full_));
        Mask allowed = next >= kMaskBits ? 0 : ~((Mask{1} << next) - 1);
        Mask options = 0;
        for (std::size_t w = next; w < balls_.size(); ++w) {
            if (balls_[w] >> u & 1) options |= Mask{1} << w;
        }
        if ((options & allowed) == 0) return false;
        for (std::size_t w = next; w + (k - chosen_.size()) <= balls_.size(); ++w) {
            chosen_.push_back(static_cast<Vertex>(w));
            if (extend(w + 1, k, covered | balls_[w])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const std::vector<Mask>& balls_;
    Mask full_;
    std::vector<Vertex> chosen_;
};

struct Candidate {
    std::int64_t weight = std::numeric_limits<std::int64_t>::max();
    std::vector<Vertex> members;

    bool better_than(const Candidate& other) const {
        if (weight != other.weight) return weight < other.weight;
        if (members.size() != other.members.size()) return members.size() < other.members.size();
        return members < other.members;
    }
};

// Branches on which vertex dominates the smallest undominated vertex; the
// candidates of each branch point are tried in ascending order and excluded
// from later siblings, so every set is generated once.
class WeightedSearch {
public:
    WeightedSearch(const std::vector<Mask>& balls, const std::vector<std::int64_t>& weight, Mask full)
        : balls_(balls), weight_(weight), full_(full) {}

    Candidate run() {
        extend(0, 0, 0);
        return best_;
    }

private:
    void extend(Mask covered, Mask forbidden, std::int64_t weight) {
        if (covered == full_) {
            Candidate c{weight, chosen_};
            std::sort(c.members.begin(), c.members.end());
            if (c.better_than(best_)) best_ = std::move(c);
            return;
        }
        auto u = static_cast<std::size_t>(std::countr_zero(~covered & full_));
        Mask options = balls_[u] & ~forbidden;  // balls are symmetric
        std::int64_t cheapest = std::numeric_limits<std::int64_t>::max();
        for (Mask m = options; m; m &= m - 1) {
            cheapest = std::min(cheapest, weight_[static_cast<std::size_t>(std::countr_zero(m))]);
        }
        if (options == 0 || weight + cheapest > best_.weight) return;
        Mask excluded = forbidden;
        for (Mask m = options; m; m &= m - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(m));
            if (weight + weight_[w] <= best_.weight) {
                chosen_.push_back(static_cast<Vertex>(w));
                extend(covered | balls_[w], excluded, weight + weight_[w]);
                chosen_.pop_back();
            }
            excluded |= Mask{1} << w;
        }
    }

    const std::vector<Mask>& balls_;
    const std::vector<std::int64_t>& weight_;
    Mask full_;
    std::vector<Vertex> chosen_;
    Candidate best_;
};

}  // namespace

DominatorSet brute_force_mds(const Graph& g, Radius r, std::size_t limit) {
    if (r == 0) throw ArgumentError("brute_force_mds: radius must be at least 1");
    check_limit(g, limit, "brute_force_mds");
    const std::size_t n = g.num_vertices();
    auto balls = ball_masks(g, r);
    SizedSearch search(balls, full_mask(n));

    DominatorSet result;
    result.radius = r;
    for (std::size_t k = 0; k <= n; ++k) {
        if (search.run(k)) {
            result.members = search.chosen();
            break;
        }
    }
    result.avg_congestion = avg_congestion(g, result.members, r);
    return result;
}

DominatorSet brute_force_mcds(const Graph& g, Radius r, std::size_t limit) {
    if (r == 0) throw ArgumentError("brute_force_mcds: radius must be at least 1");
    check_limit(g, limit, "brute_force_mcds");
    const std::size_t n = g.num_vertices();
    auto balls = ball_masks(g, r);
    std::vector<std::int64_t> weight(n);
    for (std::size_t v = 0; v < n; ++v) weight[v] = std::popcount(balls[v]);

    DominatorSet result;
    result.radius = r;
    if (n > 0) result.members = WeightedSearch(balls, weight, full_mask(n)).run().members;
    result.avg_congestion = avg_congestion(g, result.members, r);
    return result;
}

}  // namespace sparsedom
