#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "sparsedom/graph.hpp"

namespace sparsedom {

/// Compressed row storage for one direction of a digraph.
struct Adjacency {
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> targets;

    static Adjacency from_pairs(std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs);

    std::size_t size() const { return offsets.size() - 1; }
    std::span<const std::uint32_t> row(std::size_t i) const {
        return {targets.data() + offsets[i], targets.data() + offsets[i + 1]};
    }
    std::size_t degree(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
    std::size_t max_degree() const;
};

/// Digraph whose arcs all go to a strictly deeper layer, with layer-0 roots. In
/// a neighborhood kernel every arc spans exactly one layer.
struct LayeredDag {
    std::vector<std::uint32_t> layer;
    std::vector<char> is_root;
    Adjacency in;
    Adjacency out;

    std::size_t num_nodes() const { return layer.size(); }
    std::size_t num_arcs() const { return in.targets.size(); }
    /// Node ids sorted by (layer, id).
    std::vector<std::uint32_t> bfs_order() const;
};

/// Shortest-path DAG from a landmark set: arc (v, w) for every edge vw with
/// d(v, L) + 1 = d(w, L).
struct NeighborhoodKernel {
    std::vector<Vertex> landmarks;  // in caller order
    LayeredDag dag;                 // node ids are graph vertex ids

    std::size_t num_vertices() const { return dag.num_nodes(); }
    std::uint32_t layer(Vertex v) const { return dag.layer[v]; }
    std::uint32_t depth() const;
};

/// Throws ArgumentError on an empty or out-of-range landmark list and
/// ValidationError naming the first vertex no landmark reaches.
NeighborhoodKernel build_kernel(const Graph& g, std::span<const Vertex> landmarks);

/// V_0 = L, V_1, ... each sorted ascending.
std::vector<std::vector<Vertex>> layers(const NeighborhoodKernel& k);

/// Result of contracting every in-degree-1 node into its in-neighbor's bag.
struct Contraction {
    std::vector<std::uint32_t> bag_of;          // node -> bag index
    std::vector<std::uint32_t> representative;  // bag index -> node, in (layer, id) order
    LayeredDag dag;                             // over bag indices
};

/// Nodes are visited by ascending (layer, id); a node whose in-neighbors all
/// lie in one bag joins that bag, every other node opens a bag of its own.
Contraction contract_forced(const LayeredDag& dag);

/// Neighborhood kernel after forced-choice contraction. Members of a bag must
/// share a landmark in every valid neighborhood partitioning.
struct CompactKernel {
    std::vector<Vertex> landmarks;
    std::vector<std::uint32_t> vertex_layer;    // d(v, L) per vertex
    std::vector<std::uint32_t> bag_of;          // vertex -> bag index
    std::vector<Vertex> representative;         // bag index -> vertex
    std::vector<std::vector<Vertex>> members;   // bag index -> sorted members
    LayeredDag dag;                             // over bag indices
    std::vector<std::uint32_t> landmark_index;  // bag index -> landmark position, or kUnreachable

    std::size_t num_bags() const { return representative.size(); }
    Vertex representative_of(Vertex v) const { return representative[bag_of[v]]; }
    /// Bags not rooted at a landmark; each has at least two in-neighbor bags.
    std::size_t multi_choice_bags() const { return num_bags() - landmarks.size(); }
};

CompactKernel build_compact_kernel(const Graph& g, std::span<const Vertex> landmarks);
CompactKernel compact_kernel(const NeighborhoodKernel& k);

/// "#layers" block of "#label layer" lines, then one "v w" line per arc.
void write_kernel(const Graph& g, const NeighborhoodKernel& k, std::ostream& out);
/// One "representative: member,member,..." line per bag.
void write_bags(const Graph& g, const CompactKernel& k, std::ostream& out);

}  // namespace sparsedom
