#include "sparsedom/fixtures.hpp"

#include <set>
#include <string>

#include "sparsedom/errors.hpp"
#include "sparsedom/rng.hpp"

namespace sparsedom::fixtures {

namespace {

// Collects labelled vertices and edges, then freezes them into a Graph.
class Builder {
public:
    Vertex add(std::string label) {
        labels_.push_back(std::move(label));
        return static_cast<Vertex>(labels_.size() - 1);
    }
    void link(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
    Graph build() { return Graph::from_edges(labels_.size(), edges_, labels_); }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

}  // namespace

Graph fig1_left() {
    Builder b;
    std::vector<Vertex> x;
    for (int i = 1; i <= 6; ++i) x.push_back(b.add("x" + std::to_string(i)));
    const int edges[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}};
    for (auto [s, t] : edges) b.link(x[s - 1], x[t - 1]);
    return b.build();
}

CliqueWithLeaves clique_with_leaves(std::size_t ell) {
    if (ell == 0) throw ArgumentError("clique_with_leaves: ell must be positive");
    Builder b;
    CliqueWithLeaves out;
    out.v = b.add("v");
    out.u = b.add("u");
    for (std::size_t i = 1; i <= ell; ++i) out.clique.push_back(b.add("k" + std::to_string(i)));
    for (std::size_t i = 1; i <= ell; ++i) out.leaves.push_back(b.add("y" + std::to_string(i)));
    for (std::size_t i = 0; i < ell; ++i) {
        b.link(out.v, out.clique[i]);
        b.link(out.u, out.clique[i]);
        b.link(out.u, out.leaves[i]);
        for (std::size_t j = i + 1; j < ell; ++j) b.link(out.clique[i], out.clique[j]);
    }
    out.graph = b.build();
    return out;
}

BicliqueGadget biclique_with_leaves(std::size_t k) {
    if (k == 0) throw ArgumentError("biclique_with_leaves: k must be positive");
    Builder b;
    BicliqueGadget out;
    for (std::size_t i = 1; i <= k; ++i) out.side_a.push_back(b.add("a" + std::to_string(i)));
    for (std::size_t i = 1; i <= k; ++i) out.side_b.push_back(b.add("b" + std::to_string(i)));
    for (Vertex a : out.side_a) {
        for (Vertex c : out.side_b) b.link(a, c);
    }
    for (std::size_t i = 0; i < 2 * k; ++i) {
        Vertex owner = i < k ? out.side_a[i] : out.side_b[i - k];
        std::string name = (i < k ? "la" : "lb") + std::to_string(i % k + 1);
        Vertex leaf = b.add(name);
        out.leaves.push_back(leaf);
        b.link(owner, leaf);
    }
    out.graph = b.build();
    return out;
}

LandmarkInstance fig3() {
    Builder b;
    std::vector<Vertex> v;
    for (char c = 'a'; c <= 'o'; ++c) v.push_back(b.add(std::string(1, c)));
    auto id = [&](char c) { return v[static_cast<std::size_t>(c - 'a')]; };
    const char* edges[] = {"ab", "de", "ef", "df", "hi", "ij", "jk", "mn", "ad", "ae", "be", "bf",
                           "cf", "cg", "dh", "ei", "fj", "fk", "hl", "il", "im", "ik", "jm", "jn",
                           "km", "kn", "lo", "no"};
    for (const char* e : edges) b.link(id(e[0]), id(e[1]));
    return {b.build(), {id('a'), id('b'), id('c')}};
}

LandmarkInstance exact_cover_gadget(std::size_t q, const std::vector<std::array<std::uint32_t, 3>>& sets) {
    const std::size_t n = sets.size();
    if (n < q) throw ArgumentError("exact_cover_gadget: fewer sets than q");
    Builder b;
    LandmarkInstance out;
    std::vector<Vertex> set_vertex, element;
    for (std::size_t i = 1; i <= n; ++i) out.landmarks.push_back(b.add("u" + std::to_string(i)));
    for (std::size_t i = 1; i <= n; ++i) set_vertex.push_back(b.add("C" + std::to_string(i)));
    for (std::size_t i = 1; i <= 3 * q; ++i) element.push_back(b.add("e" + std::to_string(i)));
    for (Vertex u : out.landmarks) {
        for (Vertex c : set_vertex) b.link(u, c);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (auto e : sets[i]) {
            if (e >= 3 * q) throw ArgumentError("exact_cover_gadget: element out of range");
            b.link(set_vertex[i], element[e]);
        }
    }
    // The last n - q landmarks carry three leaves each.
    for (std::size_t i = q; i < n; ++i) {
        for (int j = 1; j <= 3; ++j) {
            b.link(out.landmarks[i], b.add("w" + std::to_string(i + 1) + "_" + std::to_string(j)));
        }
    }
    out.graph = b.build();
    return out;
}

LandmarkInstance sat_gadget(std::size_t num_vars, const std::vector<std::array<int, 3>>& clauses) {
    const std::size_t n = num_vars;
    const std::size_t m = clauses.size();
    Builder b;
    LandmarkInstance out;
    Vertex u1 = b.add("u1");
    Vertex u2 = b.add("u2");
    out.landmarks = {u1, u2};
    std::vector<Vertex> pos, neg, var, clause;
    for (std::size_t i = 1; i <= n; ++i) {
        pos.push_back(b.add("x" + std::to_string(i)));
        neg.push_back(b.add("nx" + std::to_string(i)));
    }
    for (std::size_t i = 1; i <= n; ++i) var.push_back(b.add("y" + std::to_string(i)));
    for (std::size_t j = 1; j <= m; ++j) clause.push_back(b.add("phi" + std::to_string(j)));

    for (Vertex u : {u1, u2}) {
        for (std::size_t i = 0; i < n; ++i) {
            b.link(u, pos[i]);
            b.link(u, neg[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        b.link(var[i], pos[i]);
        b.link(var[i], neg[i]);
        for (std::size_t j = 1; j < n; ++j) b.link(var[i], b.add("ly" + std::to_string(i + 1) + "_" + std::to_string(j)));
    }
    for (std::size_t c = 0; c < m; ++c) {
        for (int lit : clauses[c]) {
            auto i = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (i == 0 || i > n) throw ArgumentError("sat_gadget: literal out of range");
            b.link(clause[c], lit > 0 ? pos[i - 1] : neg[i - 1]);
        }
        for (std::size_t j = 1; j < n; ++j) b.link(clause[c], b.add("lphi" + std::to_string(c + 1) + "_" + std::to_string(j)));
    }
    for (std::size_t j = 1; j <= n * (n + m); ++j) b.link(u2, b.add("lu" + std::to_string(j)));
    out.graph = b.build();
    return out;
}

Graph path(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(2 * rows * cols);
    auto at = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
        }
    }
    return Graph::from_edges(rows * cols, edges);
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 2) return Graph::from_edges(n, {});
    std::size_t max_edges = n * (n - 1) / 2;
    if (m > max_edges) m = max_edges;
    Rng rng(seed);
    std::set<std::pair<Vertex, Vertex>> edges;
    while (edges.size() < m) {
        auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n));
        if (u == v) continue;
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
}

Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
    Rng rng(seed);
    std::set<std::pair<Vertex, Vertex>> edges;
    auto order = rng.permutation(n);
    for (std::size_t i = 1; i < n; ++i) {
        Vertex u = order[i];
        Vertex v = order[rng.below(i)];
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    std::size_t target = std::min(n * (n - 1) / 2, edges.size() + extra);
    while (n >= 2 && edges.size() < target) {
        auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n));
        if (u == v) continue;
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
}

}  // namespace sparsedom::fixtures
