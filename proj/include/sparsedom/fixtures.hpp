#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sparsedom/graph.hpp"

namespace sparsedom::fixtures {

/// Six-vertex graph x1..x6: triangle x1x2x3, x4 adjacent to x2 and x3, and
/// leaves x5, x6 on x4. Its minimum dominating set {x1, x4} has average
/// congestion 8/6 while {x1, x5, x6} reaches 7/6.
Graph fig1_left();

struct CliqueWithLeaves {
    Graph graph;
    Vertex v = 0;
    Vertex u = 1;
    std::vector<Vertex> clique;
    std::vector<Vertex> leaves;
};

/// K_ell joined completely to two non-adjacent vertices v and u, with ell
/// pendant leaves on u. {u, v} is a minimum dominating set; v plus the leaves
/// has lower congestion.
CliqueWithLeaves clique_with_leaves(std::size_t ell);

struct BicliqueGadget {
    Graph graph;
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
    std::vector<Vertex> leaves;  // leaves[i] hangs off (side_a ++ side_b)[i]
};

/// K_{k,k} with one pendant leaf per vertex; n = 4k. The leaves form a perfect
/// code, while A ∪ B has average congestion n/8 + 1.
BicliqueGadget biclique_with_leaves(std::size_t k);

struct LandmarkInstance {
    Graph graph;
    std::vector<Vertex> landmarks;
};

/// Fifteen vertices a..o with landmarks a, b, c and kernel depth 4.
LandmarkInstance fig3();

/// Exact-cover-by-3-sets reduction: equal five-vertex pieces exist iff the
/// collection `sets` over elements 0..3q-1 has an exact cover.
LandmarkInstance exact_cover_gadget(std::size_t q, const std::vector<std::array<std::uint32_t, 3>>& sets);

/// 3-SAT reduction with two landmarks: equal halves exist iff the formula is
/// satisfiable. Literals are +i / -i for variable i in 1..num_vars.
LandmarkInstance sat_gadget(std::size_t num_vars, const std::vector<std::array<int, 3>>& clauses);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph grid(std::size_t rows, std::size_t cols);

/// G(n, m) without repeated edges.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);
/// Random spanning tree plus `extra` random chords; always connected.
Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed);

}  // namespace sparsedom::fixtures
