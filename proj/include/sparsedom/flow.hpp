#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace sparsedom {

/// Square-sum balanced assignment: give every task to one related agent so
/// that sum over agents of (base_load + assigned)^2 is minimal.
///
/// Agents and tasks are dense indices. An empty base_load means all zero.
struct SbapInstance {
    std::size_t num_agents = 0;
    std::size_t num_tasks = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> relation;  // (agent, task)
    std::vector<std::int64_t> base_load;

    std::int64_t base(std::size_t agent) const { return base_load.empty() ? 0 : base_load[agent]; }
};

struct SbapSolution {
    std::vector<std::uint32_t> assignment;  // task -> agent
    std::vector<std::int64_t> load;         // base + assigned, per agent
    std::int64_t square_sum = 0;
    std::int64_t flow_cost = 0;  // sum of (load^2 - base^2); zero for the brute-force oracle
};

struct FlowArc {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::int64_t capacity = 1;
    std::int64_t cost = 0;
};

struct FlowNetwork {
    std::size_t num_nodes = 0;
    std::uint32_t source = 0;
    std::uint32_t sink = 0;
    std::vector<FlowArc> arcs;
};

struct FlowResult {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
    std::vector<std::int64_t> arc_flow;  // parallel to FlowNetwork::arcs
};

/// Successive shortest augmenting paths, each found by a FIFO label-correcting
/// search over the residual network. Costs and capacities must be
/// non-negative.
FlowResult min_cost_max_flow(const FlowNetwork& net);

/// Network layout: node 0 is the source, agents 1..A, tasks A+1..A+T, sink
/// A+T+1. Agent a gets one unit arc from the source per related task, the
/// i-th (1-based) costing 2(base(a) + i) - 1. Relation and sink arcs cost 0.
FlowNetwork build_sbap_network(const SbapInstance& inst);

/// Throws ValidationError naming the first task with no related agent.
SbapSolution solve_sbap(const SbapInstance& inst);

/// Exhaustive search; ties go to the lexicographically smallest assignment.
/// Throws LimitExceeded when num_tasks > 12 or the number of candidate
/// assignments exceeds `limit`. `visit`, when set, sees every assignment.
SbapSolution brute_force_sbap(
    const SbapInstance& inst, std::uint64_t limit = std::uint64_t{1} << 22,
    const std::function<void(std::span<const std::uint32_t>, std::span<const std::int64_t>)>& visit = {});

/// "from to cap cost" per arc.
void write_network(const FlowNetwork& net, std::ostream& out);

}  // namespace sparsedom
