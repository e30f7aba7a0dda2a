#include "sparsedom/flow.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sparsedom/errors.hpp"

namespace sparsedom {

namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

struct Residual {
    std::uint32_t to;
    std::int64_t capacity;
    std::int64_t cost;
};

}  // namespace

FlowResult min_cost_max_flow(const FlowNetwork& net) {
    const std::size_t n = net.num_nodes;
    if (net.source >= n || net.sink >= n) throw ArgumentError("source/sink out of range");

    // Residual arc 2i is arc i, 2i+1 its reverse.
    std::vector<Residual> residual;
    residual.reserve(2 * net.arcs.size());
    std::vector<std::vector<std::uint32_t>> out(n);
    for (const auto& arc : net.arcs) {
        if (arc.from >= n || arc.to >= n) throw ArgumentError("arc endpoint out of range");
        if (arc.capacity < 0 || arc.cost < 0) {
            throw ArgumentError("min_cost_max_flow expects non-negative capacities and costs");
        }
        out[arc.from].push_back(static_cast<std::uint32_t>(residual.size()));
        residual.push_back({arc.to, arc.capacity, arc.cost});
        out[arc.to].push_back(static_cast<std::uint32_t>(residual.size()));
        residual.push_back({arc.from, 0, -arc.cost});
    }

    FlowResult result;
    std::vector<std::int64_t> dist(n);
    std::vector<std::uint32_t> via(n);
    std::vector<char> queued(n);
    std::vector<std::uint32_t> queue;
    while (true) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::fill(queued.begin(), queued.end(), 0);
        queue.clear();
        dist[net.source] = 0;
        queue.push_back(net.source);
        queued[net.source] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t u = queue[head];
            queued[u] = 0;
            for (std::uint32_t id : out[u]) {
                const Residual& e = residual[id];
                if (e.capacity > 0 && dist[u] + e.cost < dist[e.to]) {
                    dist[e.to] = dist[u] + e.cost;
                    via[e.to] = id;
                    if (!queued[e.to]) {
                        queued[e.to] = 1;
                        queue.push_back(e.to);
                    }
                }
            }
        }
        if (dist[net.sink] == kInfinity) break;

        std::int64_t push = kInfinity;
        for (std::uint32_t v = net.sink; v != net.source; v = residual[via[v] ^ 1].to) {
            push = std::min(push, residual[via[v]].capacity);
        }
        for (std::uint32_t v = net.sink; v != net.source; v = residual[via[v] ^ 1].to) {
            residual[via[v]].capacity -= push;
            residual[via[v] ^ 1].capacity += push;
        }
        result.flow += push;
        result.cost += push * dist[net.sink];
    }

    result.arc_flow.resize(net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i) result.arc_flow[i] = residual[2 * i + 1].capacity;
    return result;
}

namespace {

void validate(const SbapInstance& inst) {
    if (!inst.base_load.empty() && inst.base_load.size() != inst.num_agents) {
        throw ArgumentError("base_load must have one entry per agent");
    }
    for (auto b : inst.base_load) {
        if (b < 0) throw ArgumentError("base loads must be non-negative");
    }
    std::vector<char> covered(inst.num_tasks, 0);
    for (auto [a, t] : inst.relation) {
        if (a >= inst.num_agents || t >= inst.num_tasks) throw ArgumentError("relation pair out of range");
        covered[t] = 1;
    }
    for (std::size_t t = 0; t < inst.num_tasks; ++t) {
        if (!covered[t]) throw ValidationError("task " + std::to_string(t) + " has no related agent");
    }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> distinct_pairs(const SbapInstance& inst) {
    auto pairs = inst.relation;
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::int64_t square_sum(std::span<const std::int64_t> load) {
    std::int64_t total = 0;
    for (auto l : load) total += l * l;
    return total;
}

}  // namespace

FlowNetwork build_sbap_network(const SbapInstance& inst) {
    validate(inst);
    auto pairs = distinct_pairs(inst);
    const auto agents = static_cast<std::uint32_t>(inst.num_agents);
    const auto tasks = static_cast<std::uint32_t>(inst.num_tasks);

    FlowNetwork net;
    net.num_nodes = std::size_t{agents} + tasks + 2;
    net.source = 0;
    net.sink = agents + tasks + 1;

    std::vector<std::int64_t> related(agents, 0);
    for (auto [a, t] : pairs) ++related[a];
    for (std::uint32_t a = 0; a < agents; ++a) {
        for (std::int64_t i = 1; i <= related[a]; ++i) {
            net.arcs.push_back({net.source, 1 + a, 1, 2 * (inst.base(a) + i) - 1});
        }
    }
    for (auto [a, t] : pairs) net.arcs.push_back({1 + a, 1 + agents + t, 1, 0});
    for (std::uint32_t t = 0; t < tasks; ++t) net.arcs.push_back({1 + agents + t, net.sink, 1, 0});
    return net;
}

SbapSolution solve_sbap(const SbapInstance& inst) {
    FlowNetwork net = build_sbap_network(inst);
    FlowResult flow = min_cost_max_flow(net);
    if (flow.flow != static_cast<std::int64_t>(inst.num_tasks)) {
        throw std::logic_error("SBAP network did not saturate all tasks");
    }

    const auto agents = static_cast<std::uint32_t>(inst.num_agents);
    SbapSolution sol;
    sol.assignment.assign(inst.num_tasks, 0);
    sol.load.resize(inst.num_agents);
    for (std::size_t a = 0; a < inst.num_agents; ++a) sol.load[a] = inst.base(a);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        const FlowArc& arc = net.arcs[i];
        bool relation_arc = arc.from >= 1 && arc.from <= agents && arc.to > agents && arc.to != net.sink;
        if (relation_arc && flow.arc_flow[i] == 1) {
            sol.assignment[arc.to - 1 - agents] = arc.from - 1;
            ++sol.load[arc.from - 1];
        }
    }
    sol.square_sum = square_sum(sol.load);
    sol.flow_cost = flow.cost;
    return sol;
}

SbapSolution brute_force_sbap(
    const SbapInstance& inst, std::uint64_t limit,
    const std::function<void(std::span<const std::uint32_t>, std::span<const std::int64_t>)>& visit) {
    validate(inst);
    if (inst.num_tasks > 12) {
        throw LimitExceeded("brute_force_sbap: " + std::to_string(inst.num_tasks) + " tasks exceeds 12");
    }
    std::vector<std::vector<std::uint32_t>> choices(inst.num_tasks);
    for (auto [a, t] : distinct_pairs(inst)) choices[t].push_back(a);
    std::uint64_t product = 1;
    for (const auto& c : choices) {
        product *= c.size();
        if (product > limit) {
            throw LimitExceeded("brute_force_sbap: more than " + std::to_string(limit) + " assignments");
        }
    }

    SbapSolution best;
    best.square_sum = std::numeric_limits<std::int64_t>::max();
    std::vector<std::uint32_t> assignment(inst.num_tasks, 0);
    std::vector<std::int64_t> load(inst.num_agents);
    for (std::size_t a = 0; a < inst.num_agents; ++a) load[a] = inst.base(a);

    // Depth-first in task order with choices ascending, so the first minimum
    // met is the lexicographically smallest assignment.
    auto descend = [&](auto&& self, std::size_t t) -> void {
        if (t == inst.num_tasks) {
            if (visit) visit(assignment, load);
            std::int64_t value = square_sum(load);
            if (value < best.square_sum) {
                best.square_sum = value;
                best.assignment = assignment;
                best.load = load;
            }
            return;
        }
        for (std::uint32_t a : choices[t]) {
            assignment[t] = a;
            ++load[a];
            self(self, t + 1);
            --load[a];
        }
    };
    descend(descend, 0);
    return best;
}

void write_network(const FlowNetwork& net, std::ostream& out) {
    for (const auto& arc : net.arcs) {
        out << arc.from << ' ' << arc.to << ' ' << arc.capacity << ' ' << arc.cost << '\n';
    }
}

}  // namespace sparsedom
