#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sparsedom/rational.hpp"

namespace sparsedom {

using Vertex = std::uint32_t;
using Radius = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Undirected simple graph over vertices 0..n-1 in compressed adjacency form.
///
/// Every vertex may carry an external label (the token it had in the input
/// file). Graphs built without labels report the decimal id as label.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph; self-loops and repeated edges are dropped.
    /// Throws ArgumentError if an endpoint is >= n.
    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                            std::vector<std::string> labels = {});

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    std::size_t min_degree() const;
    std::size_t max_degree() const;
    /// 2m/n; zero for the empty graph.
    Rational average_degree() const;

    std::string label(Vertex v) const;
    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Reverse label lookup; returns kUnreachable when the label is unknown.
    Vertex find_label(const std::string& label) const;

    /// Each edge once, as (u, v) with u < v, in ascending order.
    std::vector<std::pair<Vertex, Vertex>> edge_list() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> label_index_;
};

struct ParseReport {
    std::size_t lines = 0;
    std::size_t edges_read = 0;
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

/// Reads a whitespace separated edge list. Lines starting with '#' or '%' and
/// blank lines are skipped. Tokens are arbitrary strings, numbered 0..n-1 in
/// order of first appearance.
Graph load_edge_list(std::istream& in, ParseReport* report = nullptr);
Graph load_edge_list_file(const std::string& path, ParseReport* report = nullptr);
/// Writes labels so that load_edge_list reproduces the same graph with the same
/// vertex ids. Isolated vertices appear as self-loop lines.
void write_edge_list(const Graph& g, std::ostream& out);

/// Hop distances from a vertex set.
struct DistanceField {
    std::vector<Vertex> sources;
    std::vector<std::uint32_t> dist;

    bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
    std::uint32_t max_finite() const;
};

DistanceField multi_source_bfs(const Graph& g, std::span<const Vertex> sources);

/// Reusable scratch space for radius-bounded BFS. Not thread-safe; use one per
/// thread.
class BallScanner {
public:
    explicit BallScanner(const Graph& g);

    /// Calls f(u) for every u with d(v, u) <= r, v first, then in BFS order.
    template <typename F>
    void for_each(Vertex v, Radius r, F&& f) {
        start(v);
        std::size_t head = 0;
        while (head < queue_.size()) {
            Vertex u = queue_[head++];
            f(u);
            if (depth_[u] == r) continue;
            for (Vertex w : graph_->neighbors(u)) {
                if (stamp_[w] != epoch_) {
                    stamp_[w] = epoch_;
                    depth_[w] = depth_[u] + 1;
                    queue_.push_back(w);
                }
            }
        }
    }

    std::size_t ball_size(Vertex v, Radius r);

private:
    void start(Vertex v);

    const Graph* graph_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> depth_;
    std::vector<Vertex> queue_;
    std::uint32_t epoch_ = 0;
};

/// N^r[v], sorted ascending.
std::vector<Vertex> r_neighborhood(const Graph& g, Vertex v, Radius r);

/// G^r: uv is an edge iff 1 <= d(u, v) <= r. Labels are preserved.
Graph graph_power(const Graph& g, Radius r);

struct Components {
    std::vector<std::uint32_t> component;  // component id per vertex
    std::vector<std::size_t> sizes;
    std::size_t count() const { return sizes.size(); }
};

/// Component ids are assigned in order of each component's smallest vertex.
Components connected_components(const Graph& g);

/// Induced subgraph on the largest component, ties going to the component
/// holding the smallest vertex id. Labels are carried over.
Graph largest_component(const Graph& g);

/// Induced subgraph on `keep` (sorted, unique), relabelled 0..|keep|-1 in order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace sparsedom
