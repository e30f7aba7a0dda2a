#include "sparsedom/kernel.hpp"

#include <algorithm>
#include <ostream>

#include "sparsedom/errors.hpp"

namespace sparsedom {

Adjacency Adjacency::from_pairs(std::size_t n,
                                std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs) {
    Adjacency adj;
    adj.offsets.assign(n + 1, 0);
    for (auto [from, to] : arcs) ++adj.offsets[from + 1];
    for (std::size_t i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
    adj.targets.resize(arcs.size());
    std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
    for (auto [from, to] : arcs) adj.targets[fill[from]++] = to;
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[i]),
                  adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[i + 1]));
    }
    return adj;
}

std::size_t Adjacency::max_degree() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < size(); ++i) best = std::max(best, degree(i));
    return best;
}

std::vector<std::uint32_t> LayeredDag::bfs_order() const {
    // Counting sort on layer keeps ids ascending within a layer.
    std::uint32_t depth = 0;
    for (auto l : layer) depth = std::max(depth, l);
    std::vector<std::size_t> start(static_cast<std::size_t>(depth) + 2, 0);
    for (auto l : layer) ++start[l + 1];
    for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
    std::vector<std::uint32_t> order(layer.size());
    for (std::uint32_t v = 0; v < layer.size(); ++v) order[start[layer[v]]++] = v;
    return order;
}

std::uint32_t NeighborhoodKernel::depth() const {
    std::uint32_t best = 0;
    for (auto l : dag.layer) best = std::max(best, l);
    return best;
}

NeighborhoodKernel build_kernel(const Graph& g, std::span<const Vertex> landmarks) {
    if (landmarks.empty()) throw ArgumentError("landmark set is empty");
    const std::size_t n = g.num_vertices();
    std::vector<char> seen(n, 0);
    for (Vertex u : landmarks) {
        if (u >= n) throw ArgumentError("landmark id " + std::to_string(u) + " out of range");
        if (seen[u]) throw ArgumentError("landmark '" + g.label(u) + "' listed twice");
        seen[u] = 1;
    }

    DistanceField field = multi_source_bfs(g, landmarks);
    for (Vertex v = 0; v < n; ++v) {
        if (!field.reachable(v)) {
            throw ValidationError("vertex '" + g.label(v) + "' is not reachable from any landmark");
        }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> forward;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> backward;
    for (auto [u, v] : g.edge_list()) {
        Vertex near = field.dist[u] <= field.dist[v] ? u : v;
        Vertex far = near == u ? v : u;
        if (field.dist[near] + 1 == field.dist[far]) {
            forward.emplace_back(near, far);
            backward.emplace_back(far, near);
        }
    }

    NeighborhoodKernel k;
    k.landmarks.assign(landmarks.begin(), landmarks.end());
    k.dag.layer = std::move(field.dist);
    k.dag.is_root = std::move(seen);
    k.dag.out = Adjacency::from_pairs(n, forward);
    k.dag.in = Adjacency::from_pairs(n, backward);
    return k;
}

std::vector<std::vector<Vertex>> layers(const NeighborhoodKernel& k) {
    std::vector<std::vector<Vertex>> out(k.num_vertices() == 0 ? 0 : k.depth() + 1);
    for (Vertex v : k.dag.bfs_order()) out[k.layer(v)].push_back(v);
    return out;
}

Contraction contract_forced(const LayeredDag& dag) {
    const std::size_t n = dag.num_nodes();
    Contraction c;
    c.bag_of.assign(n, kUnreachable);
    std::vector<std::uint32_t> bag_layer;
    std::vector<char> bag_root;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> forward;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> backward;

    std::vector<std::uint32_t> stamp;
    std::vector<std::uint32_t> distinct;
    for (std::uint32_t v : dag.bfs_order()) {
        distinct.clear();
        if (!dag.is_root[v]) {
            for (std::uint32_t w : dag.in.row(v)) {
                std::uint32_t b = c.bag_of[w];
                if (b == kUnreachable) throw ArgumentError("contract_forced: arc against layer order");
                if (stamp[b] != v + 1) {
                    stamp[b] = v + 1;
                    distinct.push_back(b);
                }
            }
        }
        if (!dag.is_root[v] && distinct.size() == 1) {
            c.bag_of[v] = distinct.front();
            continue;
        }
        auto bag = static_cast<std::uint32_t>(c.representative.size());
        c.bag_of[v] = bag;
        c.representative.push_back(v);
        bag_layer.push_back(dag.layer[v]);
        bag_root.push_back(dag.is_root[v]);
        stamp.push_back(0);
        std::sort(distinct.begin(), distinct.end());
        for (std::uint32_t b : distinct) {
            forward.emplace_back(b, bag);
            backward.emplace_back(bag, b);
        }
    }

    c.dag.layer = std::move(bag_layer);
    c.dag.is_root = std::move(bag_root);
    c.dag.out = Adjacency::from_pairs(c.representative.size(), forward);
    c.dag.in = Adjacency::from_pairs(c.representative.size(), backward);
    return c;
}

CompactKernel compact_kernel(const NeighborhoodKernel& k) {
    Contraction c = contract_forced(k.dag);
    CompactKernel ck;
    ck.landmarks = k.landmarks;
    ck.vertex_layer = k.dag.layer;
    ck.bag_of = std::move(c.bag_of);
    ck.representative.assign(c.representative.begin(), c.representative.end());
    ck.dag = std::move(c.dag);
    ck.members.resize(ck.representative.size());
    for (Vertex v = 0; v < ck.bag_of.size(); ++v) ck.members[ck.bag_of[v]].push_back(v);
    ck.landmark_index.assign(ck.representative.size(), kUnreachable);
    for (std::uint32_t i = 0; i < k.landmarks.size(); ++i) {
        ck.landmark_index[ck.bag_of[k.landmarks[i]]] = i;
    }
    return ck;
}

CompactKernel build_compact_kernel(const Graph& g, std::span<const Vertex> landmarks) {
    return compact_kernel(build_kernel(g, landmarks));
}

void write_kernel(const Graph& g, const NeighborhoodKernel& k, std::ostream& out) {
    out << "#layers\n";
    for (Vertex v : k.dag.bfs_order()) out << '#' << g.label(v) << ' ' << k.layer(v) << '\n';
    for (Vertex v : k.dag.bfs_order()) {
        for (Vertex w : k.dag.out.row(v)) out << g.label(v) << ' ' << g.label(w) << '\n';
    }
}

void write_bags(const Graph& g, const CompactKernel& k, std::ostream& out) {
    for (std::size_t b = 0; b < k.num_bags(); ++b) {
        out << g.label(k.representative[b]) << ':';
        const char* sep = " ";
        for (Vertex v : k.members[b]) {
            out << sep << g.label(v);
            sep = ",";
        }
        out << '\n';
    }
}

}  // namespace sparsedom
