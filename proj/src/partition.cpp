#include "sparsedom/partition.hpp"

#include <algorithm>
#include <cmath>

#include "sparsedom/errors.hpp"
#include "sparsedom/flow.hpp"
#include "sparsedom/rng.hpp"

namespace sparsedom {

std::vector<std::int64_t> Partition::piece_sizes() const {
    std::vector<std::int64_t> sizes(landmarks.size(), 0);
    for (auto o : owner) {
        if (o < sizes.size()) ++sizes[o];
    }
    return sizes;
}

PieceStats piece_stats(std::span<const std::int64_t> sizes) {
    PieceStats stats;
    stats.sizes.assign(sizes.begin(), sizes.end());
    if (sizes.empty()) return stats;
    auto pieces = static_cast<std::int64_t>(sizes.size());
    std::int64_t total = 0;
    for (auto s : sizes) {
        total += s;
        stats.square_sum += s * s;
    }
    stats.mean = Rational(total, pieces);
    stats.variance = Rational(pieces * stats.square_sum - total * total, pieces * pieces);
    stats.stddev = std::sqrt(to_double(stats.variance));
    stats.coefficient_of_variation = total == 0 ? 0.0 : stats.stddev / to_double(stats.mean);
    return stats;
}

PieceStats piece_stats(const Partition& p) {
    auto sizes = p.piece_sizes();
    return piece_stats(sizes);
}

Partition partition_from_bags(const CompactKernel& ck, std::span<const std::uint32_t> bag_owner) {
    Partition p;
    p.landmarks = ck.landmarks;
    p.owner.resize(ck.bag_of.size());
    for (Vertex v = 0; v < ck.bag_of.size(); ++v) p.owner[v] = bag_owner[ck.bag_of[v]];
    return p;
}

Partition prt_weight(const Graph& g, std::span<const Vertex> landmarks, std::uint64_t seed) {
    CompactKernel ck = build_compact_kernel(g, landmarks);
    Rng rng(seed);
    std::vector<std::int64_t> size(landmarks.size(), 0);
    std::vector<std::uint32_t> bag_owner(ck.num_bags(), kUnassigned);
    std::vector<std::uint32_t> tied;

    // Bag indices already follow (layer, id) order.
    for (std::uint32_t b = 0; b < ck.num_bags(); ++b) {
        std::uint32_t chosen = ck.landmark_index[b];
        if (chosen == kUnreachable) {
            tied.clear();
            std::int64_t smallest = 0;
            for (std::uint32_t parent : ck.dag.in.row(b)) {
                std::uint32_t o = bag_owner[parent];
                if (std::find(tied.begin(), tied.end(), o) != tied.end()) continue;
                if (tied.empty() || size[o] < smallest) {
                    tied.assign(1, o);
                    smallest = size[o];
                } else if (size[o] == smallest) {
                    tied.push_back(o);
                }
            }
            std::sort(tied.begin(), tied.end());
            chosen = tied.size() == 1 ? tied.front() : tied[rng.below(tied.size())];
        }
        bag_owner[b] = chosen;
        size[chosen] += static_cast<std::int64_t>(ck.members[b].size());
    }
    return partition_from_bags(ck, bag_owner);
}

Partition prt_layer(const Graph& g, std::span<const Vertex> landmarks) {
    NeighborhoodKernel k = build_kernel(g, landmarks);
    Partition p;
    p.landmarks.assign(landmarks.begin(), landmarks.end());
    p.owner.assign(g.num_vertices(), kUnassigned);
    std::vector<std::int64_t> size(landmarks.size(), 1);
    for (std::uint32_t i = 0; i < landmarks.size(); ++i) p.owner[landmarks[i]] = i;

    auto by_layer = layers(k);
    std::vector<std::uint32_t> agent_of(landmarks.size(), kUnreachable);
    std::vector<std::uint32_t> agents;
    std::vector<Vertex> open;
    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 1; i < by_layer.size(); ++i) {
        SbapInstance inst;
        open.clear();
        agents.clear();
        // Tasks with a single candidate landmark are settled up front and
        // enter the flow problem only through the base loads.
        std::vector<std::vector<std::uint32_t>> choice_lists;
        for (Vertex v : by_layer[i]) {
            candidates.clear();
            for (Vertex w : k.dag.in.row(v)) candidates.push_back(p.owner[w]);
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            if (candidates.size() == 1) {
                p.owner[v] = candidates.front();
                ++size[candidates.front()];
            } else {
                open.push_back(v);
                choice_lists.push_back(candidates);
            }
        }
        if (open.empty()) continue;

        for (const auto& list : choice_lists) {
            for (auto o : list) {
                if (agent_of[o] == kUnreachable) {
                    agent_of[o] = static_cast<std::uint32_t>(agents.size());
                    agents.push_back(o);
                }
            }
        }
        inst.num_agents = agents.size();
        inst.num_tasks = open.size();
        for (auto o : agents) inst.base_load.push_back(size[o]);
        for (std::uint32_t t = 0; t < open.size(); ++t) {
            for (auto o : choice_lists[t]) inst.relation.emplace_back(agent_of[o], t);
        }
        SbapSolution sol = solve_sbap(inst);
        for (std::uint32_t t = 0; t < open.size(); ++t) {
            std::uint32_t o = agents[sol.assignment[t]];
            p.owner[open[t]] = o;
            ++size[o];
        }
        for (auto o : agents) agent_of[o] = kUnreachable;
    }
    return p;
}

const char* violation_name(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::totality: return "totality";
        case Violation::landmark_conflict: return "landmark-conflict";
        case Violation::disconnected: return "disconnected";
        case Violation::distance: return "distance-violation";
    }
    return "unknown";
}

PartitionCheck verify_partition(const Graph& g, std::span<const Vertex> landmarks, const Partition& p) {
    const std::size_t n = g.num_vertices();
    PartitionCheck check;
    auto fail = [&](Violation kind, Vertex v, const std::string& what) {
        check.ok = false;
        check.kind = kind;
        check.vertex = v;
        check.message = std::string(violation_name(kind)) + " at " + g.label(v) + ": " + what;
        return check;
    };

    if (landmarks.empty()) throw ArgumentError("verify_partition: landmark set is empty");
    if (!std::equal(landmarks.begin(), landmarks.end(), p.landmarks.begin(), p.landmarks.end())) {
        return fail(Violation::landmark_conflict, landmarks.front(),
                    "partition was built for a different landmark list");
    }
    if (p.owner.size() != n) {
        Vertex v = static_cast<Vertex>(std::min(p.owner.size(), n == 0 ? 0 : n - 1));
        return fail(Violation::totality, v, "assignment covers " + std::to_string(p.owner.size()) +
                                                " of " + std::to_string(n) + " vertices");
    }
    for (Vertex v = 0; v < n; ++v) {
        if (p.owner[v] >= landmarks.size()) return fail(Violation::totality, v, "vertex is unassigned");
    }
    for (std::uint32_t i = 0; i < landmarks.size(); ++i) {
        if (p.owner[landmarks[i]] != i) {
            return fail(Violation::landmark_conflict, landmarks[i],
                        "landmark placed in the piece of " + g.label(landmarks[p.owner[landmarks[i]]]));
        }
    }

    DistanceField global = multi_source_bfs(g, landmarks);
    // One BFS from all landmarks that only crosses edges inside a piece yields
    // d_{G[A_i]}(v, u_i) for every v at once.
    std::vector<std::uint32_t> inside(n, kUnreachable);
    std::vector<Vertex> queue(landmarks.begin(), landmarks.end());
    for (Vertex u : landmarks) inside[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (p.owner[w] == p.owner[u] && inside[w] == kUnreachable) {
                inside[w] = inside[u] + 1;
                queue.push_back(w);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (inside[v] == kUnreachable) {
            return fail(Violation::disconnected, v,
                        "not connected to landmark " + g.label(p.landmark_of(v)) + " inside its piece");
        }
        if (inside[v] != global.dist[v]) {
            return fail(Violation::distance, v,
                        "distance " + std::to_string(inside[v]) + " inside piece, " +
                            std::to_string(global.dist[v]) + " in graph");
        }
    }
    check.ok = true;
    return check;
}

}  // namespace sparsedom
