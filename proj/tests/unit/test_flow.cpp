#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sparsedom/errors.hpp"
#include "sparsedom/flow.hpp"
#include "sparsedom/rational.hpp"

using namespace sparsedom;

namespace {

SbapInstance full(std::size_t agents, std::size_t tasks) {
    SbapInstance inst;
    inst.num_agents = agents;
    inst.num_tasks = tasks;
    for (std::uint32_t t = 0; t < tasks; ++t)
        for (std::uint32_t a = 0; a < agents; ++a) inst.relation.emplace_back(a, t);
    return inst;
}

SbapInstance random_instance(Rng& rng) {
    SbapInstance inst;
    inst.num_agents = 1 + rng.below(4);
    inst.num_tasks = rng.below(11);
    for (std::uint32_t t = 0; t < inst.num_tasks; ++t) {
        bool any = false;
        for (std::uint32_t a = 0; a < inst.num_agents; ++a) {
            if (rng.below(2) == 0) {
                inst.relation.emplace_back(a, t);
                any = true;
            }
        }
        if (!any) inst.relation.emplace_back(static_cast<std::uint32_t>(rng.below(inst.num_agents)), t);
    }
    if (rng.below(3) != 0) {
        for (std::size_t a = 0; a < inst.num_agents; ++a) inst.base_load.push_back(static_cast<std::int64_t>(rng.below(4)));
    }
    return inst;
}

// Odometer over every task's candidate list; returns the minimum square sum.
std::int64_t enumerate_min(const SbapInstance& inst) {
    std::vector<std::vector<std::uint32_t>> options(inst.num_tasks);
    for (auto [a, t] : inst.relation) options[t].push_back(a);
    std::vector<std::size_t> pick(inst.num_tasks, 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    while (true) {
        std::vector<std::int64_t> load(inst.num_agents);
        for (std::size_t a = 0; a < inst.num_agents; ++a) load[a] = inst.base(a);
        for (std::size_t t = 0; t < inst.num_tasks; ++t) ++load[options[t][pick[t]]];
        std::int64_t ss = 0;
        for (auto l : load) ss += l * l;
        best = std::min(best, ss);
        std::size_t t = 0;
        while (t < inst.num_tasks && ++pick[t] == options[t].size()) pick[t++] = 0;
        if (t == inst.num_tasks) break;
    }
    return best;
}

}  // namespace

TEST_CASE("balanced assignment examples") {
    SbapSolution one = solve_sbap(full(1, 2));
    CHECK(one.square_sum == 4);
    CHECK(one.assignment == std::vector<std::uint32_t>{0, 0});

    SbapSolution two = solve_sbap(full(2, 3));
    CHECK(two.square_sum == 5);
    std::multiset<std::int64_t> loads(two.load.begin(), two.load.end());
    CHECK(loads == std::multiset<std::int64_t>{1, 2});

    SbapInstance forced;
    forced.num_agents = 2;
    forced.num_tasks = 1;
    forced.relation = {{0, 0}};
    forced.base_load = {0, 5};
    SbapSolution f = solve_sbap(forced);
    CHECK(f.assignment == std::vector<std::uint32_t>{0});
    CHECK(f.square_sum == 26);
    CHECK(f.load == std::vector<std::int64_t>{1, 5});
}

TEST_CASE("infeasible task is named") {
    SbapInstance inst;
    inst.num_agents = 2;
    inst.num_tasks = 3;
    inst.relation = {{0, 0}, {1, 2}};
    try {
        solve_sbap(inst);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("task 1") != std::string::npos);
    }
}

TEST_CASE("exhaustive assignment examples") {
    CHECK(brute_force_sbap(full(2, 3)).square_sum == 5);

    SbapInstance single;
    single.num_agents = 3;
    single.num_tasks = 1;
    single.relation = {{1, 0}};
    single.base_load = {2, 4, 1};
    CHECK(brute_force_sbap(single).square_sum == 25 + 4 + 1);

    SbapInstance diagonal;
    diagonal.num_agents = 2;
    diagonal.num_tasks = 2;
    diagonal.relation = {{0, 0}, {1, 1}};
    CHECK(brute_force_sbap(diagonal).square_sum == 2);

    CHECK_THROWS_AS(brute_force_sbap(full(2, 13)), LimitExceeded);
    CHECK_THROWS_AS(brute_force_sbap(full(4, 12), 1000), LimitExceeded);
}

TEST_CASE("min-cost flow examples") {
    // Three agents with two, two and three source arcs over four tasks.
    SbapInstance inst;
    inst.num_agents = 3;
    inst.num_tasks = 4;
    inst.relation = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}};
    FlowNetwork net = build_sbap_network(inst);
    CHECK(net.num_nodes == 1 + 3 + 4 + 1);
    std::map<std::uint32_t, std::vector<std::int64_t>> source_costs;
    for (const auto& arc : net.arcs) {
        CHECK(arc.capacity == 1);
        if (arc.from == net.source) source_costs[arc.to].push_back(arc.cost);
        else CHECK(arc.cost == 0);
    }
    CHECK(source_costs[1] == std::vector<std::int64_t>{1, 3});
    CHECK(source_costs[2] == std::vector<std::int64_t>{1, 3});
    CHECK(source_costs[3] == std::vector<std::int64_t>{1, 3, 5});
    FlowResult r = min_cost_max_flow(net);
    CHECK(r.flow == 4);
    CHECK(r.cost == 1 + 1 + 1 + 3);  // loads 1, 1, 2
    CHECK(r.cost == solve_sbap(inst).flow_cost);

    FlowNetwork empty;
    empty.num_nodes = 2;
    empty.source = 0;
    empty.sink = 1;
    FlowResult none = min_cost_max_flow(empty);
    CHECK(none.flow == 0);
    CHECK(none.cost == 0);

    FlowNetwork chain;
    chain.num_nodes = 4;
    chain.source = 0;
    chain.sink = 3;
    chain.arcs = {{0, 1, 1, 1}, {1, 2, 1, 0}, {2, 3, 1, 0}};
    FlowResult c = min_cost_max_flow(chain);
    CHECK(c.flow == 1);
    CHECK(c.cost == 1);
    CHECK(c.arc_flow == std::vector<std::int64_t>{1, 1, 1});

    FlowNetwork negative = chain;
    negative.arcs[1].cost = -1;
    CHECK_THROWS_AS(min_cost_max_flow(negative), ArgumentError);
}

TEST_CASE("source arc costs follow base loads") {
    SbapInstance inst = full(2, 2);
    inst.base_load = {3, 0};
    FlowNetwork net = build_sbap_network(inst);
    std::vector<std::int64_t> costs;
    for (const auto& arc : net.arcs)
        if (arc.from == net.source && arc.to == 1) costs.push_back(arc.cost);
    CHECK(costs == std::vector<std::int64_t>{7, 9});

    std::ostringstream out;
    write_network(build_sbap_network(full(1, 1)), out);
    CHECK(out.str() == "0 1 1 1\n1 2 1 0\n2 3 1 0\n");
}

TEST_CASE("flow matches exhaustive search on random instances") {
    Rng rng(31);
    for (int round = 0; round < 300; ++round) {
        SbapInstance inst = random_instance(rng);
        SbapSolution flow = solve_sbap(inst);
        SbapSolution brute = brute_force_sbap(inst);
        CHECK(flow.square_sum == brute.square_sum);
        CHECK(flow.square_sum == enumerate_min(inst));

        std::set<std::pair<std::uint32_t, std::uint32_t>> rel(inst.relation.begin(), inst.relation.end());
        std::vector<std::int64_t> load(inst.num_agents);
        for (std::size_t a = 0; a < inst.num_agents; ++a) load[a] = inst.base(a);
        REQUIRE(flow.assignment.size() == inst.num_tasks);
        for (std::uint32_t t = 0; t < inst.num_tasks; ++t) {
            CHECK(rel.count({flow.assignment[t], t}) == 1);
            ++load[flow.assignment[t]];
        }
        CHECK(load == flow.load);

        // Unit costs 2i - 1 above the base telescope to load^2 - base^2.
        std::int64_t telescoped = 0, squares = 0;
        for (std::size_t a = 0; a < inst.num_agents; ++a) {
            for (std::int64_t i = inst.base(a) + 1; i <= load[a]; ++i) telescoped += 2 * i - 1;
            squares += load[a] * load[a] - inst.base(a) * inst.base(a);
        }
        CHECK(flow.flow_cost == telescoped);
        CHECK(telescoped == squares);

        FlowResult raw = min_cost_max_flow(build_sbap_network(inst));
        CHECK(raw.flow == static_cast<std::int64_t>(inst.num_tasks));
        CHECK(raw.cost == flow.flow_cost);
        for (auto f : raw.arc_flow) CHECK((f == 0 || f == 1));
    }
}

TEST_CASE("minimum variance and minimum square sum pick the same assignments") {
    Rng rng(32);
    for (int round = 0; round < 100; ++round) {
        SbapInstance inst = random_instance(rng);
        std::vector<std::vector<std::uint32_t>> all;
        std::vector<std::int64_t> square;
        std::vector<Rational> variance;
        brute_force_sbap(inst, std::uint64_t{1} << 22,
                         [&](std::span<const std::uint32_t> assignment, std::span<const std::int64_t> load) {
                             all.emplace_back(assignment.begin(), assignment.end());
                             std::int64_t ss = 0, total = 0;
                             for (auto l : load) {
                                 ss += l * l;
                                 total += l;
                             }
                             auto k = static_cast<std::int64_t>(load.size());
                             Rational mean(total, k);
                             Rational var(0);
                             for (auto l : load) var += (Rational(l) - mean) * (Rational(l) - mean);
                             square.push_back(ss);
                             variance.push_back(var / k);
                         });
        REQUIRE_FALSE(all.empty());
        std::int64_t best_ss = *std::min_element(square.begin(), square.end());
        Rational best_var = *std::min_element(variance.begin(), variance.end());
        for (std::size_t i = 0; i < all.size(); ++i) CHECK((square[i] == best_ss) == (variance[i] == best_var));
    }
}
