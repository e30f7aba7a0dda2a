#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "sparsedom/domset.hpp"
#include "sparsedom/errors.hpp"
#include "sparsedom/fixtures.hpp"

using namespace sparsedom;

namespace {

Vertex id(const Graph& g, const std::string& label) {
    Vertex v = g.find_label(label);
    REQUIRE(v != kUnreachable);
    return v;
}

std::vector<Vertex> ids(const Graph& g, std::initializer_list<const char*> labels) {
    std::vector<Vertex> out;
    for (const char* l : labels) out.push_back(id(g, l));
    std::sort(out.begin(), out.end());
    return out;
}

bool dominates(const std::vector<std::vector<std::uint32_t>>& d, const std::vector<Vertex>& s, Radius r) {
    for (std::size_t v = 0; v < d.size(); ++v) {
        bool hit = false;
        for (Vertex u : s) hit = hit || d[v][u] <= r;
        if (!hit) return false;
    }
    return true;
}

// Recomputes every key from scratch at every step; ties fall to tie_order.
std::vector<Vertex> naive_greedy(const Graph& g, Radius r, const GreedyConfig& cfg) {
    auto d = oracle::all_pairs(g);
    const std::size_t n = g.num_vertices();
    std::vector<std::int64_t> ball(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) ball[v] += d[v][u] <= r;
    std::vector<char> dominated(n, 0);
    std::vector<Vertex> chosen;
    auto left = [&] { return std::count(dominated.begin(), dominated.end(), 0); };
    while (left() > 0) {
        std::vector<std::int64_t> fresh(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) fresh[v] += d[v][u] <= r && !dominated[u];
        // Compare a/b against c/e exactly.
        auto cmp_ratio = [&](std::size_t a, std::size_t b) { return fresh[a] * ball[b] - fresh[b] * ball[a]; };
        auto cmp_degree = [&](std::size_t a, std::size_t b) { return fresh[a] - fresh[b]; };
        auto better = [&](std::size_t a, std::size_t b) {
            std::int64_t primary = cfg.strategy == GreedyStrategy::degree ? cmp_degree(a, b) : cmp_ratio(a, b);
            if (primary != 0) return primary > 0;
            std::int64_t secondary = 0;
            if (cfg.tiebreak == TieBreak::ratio) secondary = cmp_ratio(a, b);
            if (cfg.tiebreak == TieBreak::degree) secondary = cmp_degree(a, b);
            if (secondary != 0) return secondary > 0;
            return cfg.tie_order[a] < cfg.tie_order[b];
        };
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (fresh[v] == 0) continue;
            if (best == n || better(v, best)) best = v;
        }
        chosen.push_back(static_cast<Vertex>(best));
        for (std::size_t u = 0; u < n; ++u)
            if (d[best][u] <= r) dominated[u] = 1;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

const char* kVariants[] = {"degree", "degree+", "ratio", "ratio+"};

}  // namespace

TEST_CASE("congestion examples") {
    Graph g = fixtures::fig1_left();
    auto s = ids(g, {"x1", "x4"});
    CHECK(congestion_at(g, s, 1, id(g, "x2")) == 2);
    CHECK(congestion_at(g, s, 1, id(g, "x5")) == 1);
    CHECK(congestion_at(g, std::vector<Vertex>{}, 1, 0) == 0);

    CHECK(avg_congestion(g, s, 1) == Rational(8, 6));
    CHECK(avg_congestion(g, ids(g, {"x1", "x5", "x6"}), 1) == Rational(7, 6));
    CHECK(avg_congestion(fixtures::star(5), std::vector<Vertex>{0}, 1) == Rational(1));
}

TEST_CASE("average congestion identity on random subsets") {
    Rng rng(101);
    for (int round = 0; round < 150; ++round) {
        Graph g = fixtures::random_gnm(1 + rng.below(60), rng.below(150), rng.next());
        Radius r = 1 + static_cast<Radius>(rng.below(3));
        auto s = oracle::random_subset(g.num_vertices(), rng.below(g.num_vertices() + 1), rng);
        auto d = oracle::all_pairs(g);
        std::int64_t per_vertex = 0, per_member = 0;
        for (std::size_t v = 0; v < d.size(); ++v) {
            for (Vertex u : s) per_vertex += d[v][u] <= r;
        }
        for (Vertex u : s)
            for (std::size_t v = 0; v < d.size(); ++v) per_member += d[u][v] <= r;
        CHECK(per_vertex == per_member);
        auto n = static_cast<std::int64_t>(g.num_vertices());
        CHECK(avg_congestion(g, s, r) == Rational(per_member, n));
        auto profile = congestion_profile(g, s, r);
        std::int64_t total = 0;
        for (auto c : profile) total += static_cast<std::int64_t>(c);
        CHECK(total == per_vertex);
        Vertex probe = static_cast<Vertex>(rng.below(g.num_vertices()));
        CHECK(congestion_at(g, s, r, probe) == profile[probe]);
    }
}

TEST_CASE("greedy config names and pairing") {
    for (const char* name : kVariants) CHECK(GreedyConfig::named(name).name() == name);
    CHECK(GreedyConfig::named("degree+").tiebreak == TieBreak::ratio);
    CHECK(GreedyConfig::named("ratio+").tiebreak == TieBreak::degree);
    CHECK_THROWS_AS(GreedyConfig::named("brute-mds"), ArgumentError);
    GreedyConfig bad{GreedyStrategy::degree, TieBreak::degree, 0, {}};
    CHECK_THROWS_AS(bad.validate(), ArgumentError);
    CHECK_THROWS_AS(greedy_dominate(fixtures::path(3), 1, bad), ArgumentError);
}

TEST_CASE("greedy on a star picks the center") {
    auto cfg = GreedyConfig::named("degree");
    DominatorSet d = greedy_dominate(fixtures::star(5), 1, cfg);
    CHECK(d.members == std::vector<Vertex>{0});
    CHECK(d.avg_congestion == Rational(1));
}

TEST_CASE("greedy on the clique-with-leaves family") {
    for (std::size_t ell : {3u, 5u, 8u}) {
        auto gadget = fixtures::clique_with_leaves(ell);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            DominatorSet d = greedy_dominate(gadget.graph, 1, GreedyConfig::named("degree", seed));
            CHECK(d.size() == 2);
            CHECK(std::binary_search(d.members.begin(), d.members.end(), gadget.u));
        }
        // With the ratio tie-break, v beats every clique vertex for the second pick.
        DominatorSet plus = greedy_dominate(gadget.graph, 1, GreedyConfig::named("degree+"));
        CHECK(plus.members == std::vector<Vertex>{gadget.v, gadget.u});
    }
}

TEST_CASE("biclique gadget: ratio with leaves first, degree with biclique first") {
    for (std::size_t k : {3u, 4u, 5u}) {
        auto gadget = fixtures::biclique_with_leaves(k);
        const Graph& g = gadget.graph;
        const auto n = static_cast<std::int64_t>(g.num_vertices());

        GreedyConfig ratio = GreedyConfig::named("ratio");
        ratio.tie_order.assign(g.num_vertices(), 0);
        for (Vertex v = 0; v < g.num_vertices(); ++v) ratio.tie_order[v] = static_cast<std::uint32_t>(g.num_vertices() - v);
        DominatorSet leaves_first = greedy_dominate(g, 1, ratio);
        CHECK(leaves_first.avg_congestion == Rational(1));
        CHECK(is_perfect_code(g, leaves_first.members, 1).ok);

        GreedyConfig degree = GreedyConfig::named("degree");
        degree.tie_order.resize(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) degree.tie_order[v] = v;
        DominatorSet adversarial = greedy_dominate(g, 1, degree);
        CHECK(adversarial.avg_congestion == Rational(n, 8) + 1);
        CHECK(adversarial.size() == 2 * k);

        // Degree greedy takes a biclique vertex first whatever the seed, so it
        // can never return the perfect code.
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            DominatorSet d = greedy_dominate(g, 1, GreedyConfig::named("degree", seed));
            CHECK(d.avg_congestion > Rational(1));
        }
    }
}

TEST_CASE("greedy matches a from-scratch re-evaluation") {
    Rng rng(202);
    for (int round = 0; round < 60; ++round) {
        Graph g = fixtures::random_gnm(1 + rng.below(30), rng.below(70), rng.next());
        Radius r = 1 + static_cast<Radius>(rng.below(3));
        for (const char* name : kVariants) {
            GreedyConfig cfg = GreedyConfig::named(name);
            auto perm = rng.permutation(g.num_vertices());
            cfg.tie_order.assign(perm.begin(), perm.end());
            DominatorSet got = greedy_dominate(g, r, cfg);
            CHECK(got.members == naive_greedy(g, r, cfg));
            CHECK(got.radius == r);
        }
    }
}

TEST_CASE("greedy output dominates and is deterministic") {
    Rng rng(303);
    for (int round = 0; round < 40; ++round) {
        Graph g = fixtures::random_gnm(1 + rng.below(80), rng.below(200), rng.next());
        Radius r = 1 + static_cast<Radius>(rng.below(3));
        std::uint64_t seed = rng.next();
        for (const char* name : kVariants) {
            auto cfg = GreedyConfig::named(name, seed);
            DominatorSet a = greedy_dominate(g, r, cfg);
            DominatorSet b = greedy_dominate(g, r, cfg);
            CHECK(verify_r_domination(g, a.members, r).ok);
            CHECK(a.members == b.members);
            CHECK(a.avg_congestion == avg_congestion(g, a.members, r));
            CHECK(a.avg_congestion >= Rational(1));
        }
    }
}

TEST_CASE("greedy is identical across threads") {
    Graph g = fixtures::random_connected(300, 500, 9);
    auto cfg = GreedyConfig::named("ratio+", 4);
    DominatorSet base = greedy_dominate(g, 2, cfg);
    std::vector<DominatorSet> results(4);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < results.size(); ++i) {
        pool.emplace_back([&, i] { results[i] = greedy_dominate(g, 2, cfg); });
    }
    for (auto& t : pool) t.join();
    for (const auto& r : results) CHECK(r.members == base.members);
}

TEST_CASE("domination and perfect-code checks") {
    Graph g = fixtures::fig1_left();
    CHECK(verify_r_domination(g, ids(g, {"x1", "x4"}), 1).ok);
    auto miss = verify_r_domination(fixtures::path(4), std::vector<Vertex>{0}, 1);
    CHECK_FALSE(miss.ok);
    REQUIRE(miss.witness.has_value());
    CHECK((*miss.witness == 2 || *miss.witness == 3));
    std::vector<Vertex> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0u);
    for (Radius r = 1; r <= 3; ++r) CHECK(verify_r_domination(g, all, r).ok);

    CHECK(is_perfect_code(fixtures::star(5), std::vector<Vertex>{0}, 1).ok);
    auto pc = is_perfect_code(g, ids(g, {"x1", "x4"}), 1);
    CHECK_FALSE(pc.ok);
    REQUIRE(pc.witness.has_value());
    CHECK(*pc.witness == id(g, "x2"));
    CHECK(pc.witness_congestion == 2);

    auto gadget = fixtures::biclique_with_leaves(3);
    CHECK(is_perfect_code(gadget.graph, gadget.leaves, 1).ok);
}

TEST_CASE("exhaustive oracles on small fixtures") {
    Graph g = fixtures::fig1_left();
    DominatorSet mds = brute_force_mds(g, 1);
    CHECK(mds.size() == 2);
    CHECK(mds.members == ids(g, {"x1", "x4"}));
    CHECK(mds.avg_congestion == Rational(8, 6));
    DominatorSet mcds = brute_force_mcds(g, 1);
    CHECK(mcds.avg_congestion == Rational(7, 6));
    CHECK(mcds.members == ids(g, {"x1", "x5", "x6"}));

    CHECK(brute_force_mds(fixtures::path(3), 1).members == std::vector<Vertex>{1});
    CHECK(brute_force_mds(fixtures::cycle(6), 1).size() == 2);
    CHECK(brute_force_mcds(fixtures::star(5), 1).avg_congestion == Rational(1));

    auto gadget = fixtures::biclique_with_leaves(3);
    DominatorSet mac = brute_force_mcds(gadget.graph, 1);
    CHECK(mac.avg_congestion == Rational(1));
    CHECK(is_perfect_code(gadget.graph, mac.members, 1).ok);
}

TEST_CASE("exhaustive oracles agree with plain subset enumeration") {
    Rng rng(404);
    for (int round = 0; round < 60; ++round) {
        Graph g = fixtures::random_gnm(1 + rng.below(13), rng.below(25), rng.next());
        Radius r = 1 + static_cast<Radius>(rng.below(2));
        auto size_opt = oracle::min_dominating_subset(g, r, false);
        auto weight_opt = oracle::min_dominating_subset(g, r, true);
        DominatorSet mds = brute_force_mds(g, r);
        DominatorSet mcds = brute_force_mcds(g, r);
        CHECK(mds.members == size_opt.members);
        CHECK(mcds.members == weight_opt.members);
        auto n = static_cast<std::int64_t>(g.num_vertices());
        CHECK(mcds.avg_congestion == Rational(weight_opt.weight, n));
        CHECK(mcds.avg_congestion >= Rational(1));
        CHECK((mcds.avg_congestion == Rational(1)) == is_perfect_code(g, mcds.members, r).ok);
    }
}

TEST_CASE("exhaustive oracles refuse large inputs") {
    Graph g = fixtures::path(30);
    CHECK_THROWS_AS(brute_force_mds(g, 1), LimitExceeded);
    CHECK_THROWS_AS(brute_force_mcds(g, 1, 10), LimitExceeded);
    CHECK_THROWS_AS(brute_force_mds(fixtures::path(70), 1, 100), LimitExceeded);
    CHECK(brute_force_mds(g, 1, 30).size() == 10);

    ::setenv("SPARSEDOM_BRUTE_LIMIT", "31", 1);
    CHECK(default_brute_force_limit() == 31);
    ::unsetenv("SPARSEDOM_BRUTE_LIMIT");
    CHECK(default_brute_force_limit() == 24);
}

TEST_CASE("minimalize examples") {
    Graph star = fixtures::star(3);
    std::vector<Vertex> all{0, 1, 2, 3};
    auto m = minimalize_dominating_set(star, all, 1);
    CHECK(m == std::vector<Vertex>{1, 2, 3});

    CHECK(minimalize_dominating_set(fixtures::path(3), std::vector<Vertex>{0, 1, 2}, 1) == std::vector<Vertex>{1});
    CHECK(minimalize_dominating_set(star, std::vector<Vertex>{0}, 1) == std::vector<Vertex>{0});
    CHECK_THROWS_AS(minimalize_dominating_set(fixtures::path(4), std::vector<Vertex>{0}, 1), ArgumentError);
}

TEST_CASE("minimalize output is minimal and obeys the average-degree bound") {
    Rng rng(505);
    for (int round = 0; round < 60; ++round) {
        Graph g = oracle::random_connected(2 + rng.below(38), rng);
        Radius r = 1 + static_cast<Radius>(rng.below(2));
        std::vector<Vertex> all(g.num_vertices());
        std::iota(all.begin(), all.end(), 0u);
        auto m = minimalize_dominating_set(g, all, r);
        auto d = oracle::all_pairs(g);
        CHECK(dominates(d, m, r));
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto probe = m;
            probe.erase(probe.begin() + static_cast<std::ptrdiff_t>(i));
            CHECK_FALSE(dominates(d, probe, r));
        }
        if (r == 1) {
            std::vector<Vertex> rest;
            std::set_difference(all.begin(), all.end(), m.begin(), m.end(), std::back_inserter(rest));
            Rational bound = (g.average_degree() + 1) / 2;
            Rational best = std::min(avg_congestion(g, m, 1), avg_congestion(g, rest, 1));
            CHECK(best <= bound);
        }
    }
}

TEST_CASE("greedy stays within a loose multiple of the optimum") {
    Rng rng(606);
    for (int round = 0; round < 40; ++round) {
        Graph g = oracle::random_connected(2 + rng.below(20), rng);
        DominatorSet mac = brute_force_mcds(g, 1);
        DominatorSet got = greedy_dominate(g, 1, GreedyConfig::named("ratio+", rng.next()));
        double envelope = M_PI / 2 * std::sqrt(static_cast<double>(g.max_degree())) + 4;
        CHECK(to_double(got.avg_congestion / mac.avg_congestion) <= envelope);
    }
}

TEST_CASE("ILP export structure") {
    Graph tri = fixtures::cycle(3);
    std::string model = export_ilp(tri, 1, IlpObjective::size);
    CHECK(model.find("Minimize\n obj: 1 x_0 + 1 x_1 + 1 x_2\n") != std::string::npos);
    CHECK(model.find(" c_0: 1 x_0 + 1 x_1 + 1 x_2 >= 1\n") != std::string::npos);
    CHECK(model.find(" c_2: ") != std::string::npos);
    CHECK(model.find("Binary\n x_0\n x_1\n x_2\nEnd\n") != std::string::npos);

    Graph g = fixtures::fig1_left();
    std::string mac = export_ilp(g, 1, IlpObjective::congestion);
    CHECK(mac.find(" 5 x_x4") != std::string::npos);
    CHECK(mac.find(" 3 x_x1") != std::string::npos);

    Graph single = Graph::from_edges(1, {});
    CHECK(export_ilp(single, 1, IlpObjective::size).find(" c_0: 1 x_0 >= 1\n") != std::string::npos);

    std::string wide = export_ilp(fixtures::path(5), 2, IlpObjective::size);
    CHECK(wide.find(" c_2: 1 x_0 + 1 x_1 + 1 x_2 + 1 x_3 + 1 x_4 >= 1\n") != std::string::npos);
    CHECK(export_ilp(g, 2, IlpObjective::size) == export_ilp(g, 2, IlpObjective::size));
}
