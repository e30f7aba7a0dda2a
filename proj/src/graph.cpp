#include "sparsedom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sparsedom/errors.hpp"

namespace sparsedom {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n) {
        throw ArgumentError("label count " + std::to_string(labels.size()) +
                            " does not match vertex count " + std::to_string(n));
    }
    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + " " +
                                std::to_string(v));
        }
        if (u == v) continue;
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    std::vector<Vertex> raw(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        raw[fill[u]++] = v;
        raw[fill[v]++] = u;
    }

    // Sort and dedupe each row, then compact.
    std::vector<std::size_t> offsets(n + 1, 0);
    std::size_t out = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        auto end = std::unique(first, last);
        for (auto it = first; it != end; ++it) raw[out++] = *it;
        offsets[v + 1] = out;
    }
    raw.resize(out);
    raw.shrink_to_fit();
    g.offsets_ = std::move(offsets);
    g.adjacency_ = std::move(raw);

    g.labels_ = std::move(labels);
    g.label_index_.reserve(g.labels_.size());
    for (std::size_t v = 0; v < g.labels_.size(); ++v) {
        if (!g.label_index_.emplace(g.labels_[v], static_cast<Vertex>(v)).second) {
            throw ArgumentError("duplicate vertex label '" + g.labels_[v] + "'");
        }
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const {
    std::size_t best = num_vertices() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < num_vertices(); ++v) best = std::min(best, degree(v));
    return best;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
    return best;
}

Rational Graph::average_degree() const {
    if (num_vertices() == 0) return Rational(0);
    return Rational(static_cast<std::int64_t>(2 * num_edges()),
                    static_cast<std::int64_t>(num_vertices()));
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Vertex Graph::find_label(const std::string& label) const {
    if (labels_.empty()) {
        // Unlabelled graphs answer to their decimal ids.
        std::size_t pos = 0;
        try {
            unsigned long id = std::stoul(label, &pos);
            if (pos == label.size() && id < num_vertices()) return static_cast<Vertex>(id);
        } catch (const std::exception&) {
        }
        return kUnreachable;
    }
    auto it = label_index_.find(label);
    return it == label_index_.end() ? kUnreachable : it->second;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return edges;
}

Graph load_edge_list(std::istream& in, ParseReport* report) {
    ParseReport local;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    while (std::getline(in, line)) {
        ++local.lines;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw ParseError(local.lines, "expected two vertex tokens, got '" + line + "'");
        }
        ++local.edges_read;
        Vertex u = intern(a);
        Vertex v = intern(b);
        if (u == v) {
            ++local.self_loops;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    std::sort(edges.begin(), edges.end());
    auto end = std::unique(edges.begin(), edges.end());
    local.duplicate_edges = static_cast<std::size_t>(edges.end() - end);
    edges.erase(end, edges.end());

    if (report) *report = local;
    std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
}

Graph load_edge_list_file(const std::string& path, ParseReport* report) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open graph file '" + path + "'");
    return load_edge_list(in, report);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    // The loader numbers vertices by first appearance, so lead with lines that
    // introduce the vertices in id order; the remaining edges follow sorted.
    const std::size_t n = g.num_vertices();
    auto line = [&](Vertex a, Vertex b) { out << g.label(a) << ' ' << g.label(b) << '\n'; };
    std::vector<std::pair<Vertex, Vertex>> lead;
    for (Vertex v = 0; v < n;) {
        auto nb = g.neighbors(v);
        if (!nb.empty() && nb.front() < v) {
            lead.emplace_back(nb.front(), v);
            v += 1;
        } else if (v + 1 < n && g.has_edge(v, v + 1)) {
            lead.emplace_back(v, v + 1);
            v += 2;
        } else {
            line(v, v);  // dropped on reload, but the vertex keeps its id
            v += 1;
            continue;
        }
        line(lead.back().first, lead.back().second);
    }
    std::sort(lead.begin(), lead.end());
    for (const auto& e : g.edge_list()) {
        if (!std::binary_search(lead.begin(), lead.end(), e)) line(e.first, e.second);
    }
}

std::uint32_t DistanceField::max_finite() const {
    std::uint32_t best = 0;
    for (auto d : dist) {
        if (d != kUnreachable) best = std::max(best, d);
    }
    return best;
}

DistanceField multi_source_bfs(const Graph& g, std::span<const Vertex> sources) {
    if (sources.empty()) throw ArgumentError("multi_source_bfs: empty source set");
    DistanceField field;
    field.sources.assign(sources.begin(), sources.end());
    field.dist.assign(g.num_vertices(), kUnreachable);

    std::vector<Vertex> queue;
    queue.reserve(g.num_vertices());
    for (Vertex s : sources) {
        if (s >= g.num_vertices()) throw ArgumentError("source id out of range");
        if (field.dist[s] != 0) {
            field.dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (field.dist[w] == kUnreachable) {
                field.dist[w] = field.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return field;
}

BallScanner::BallScanner(const Graph& g)
    : graph_(&g), stamp_(g.num_vertices(), 0), depth_(g.num_vertices(), 0) {}

void BallScanner::start(Vertex v) {
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    queue_.clear();
    stamp_[v] = epoch_;
    depth_[v] = 0;
    queue_.push_back(v);
}

std::size_t BallScanner::ball_size(Vertex v, Radius r) {
    std::size_t count = 0;
    for_each(v, r, [&](Vertex) { ++count; });
    return count;
}

std::vector<Vertex> r_neighborhood(const Graph& g, Vertex v, Radius r) {
    if (v >= g.num_vertices()) throw ArgumentError("vertex id out of range");
    BallScanner scanner(g);
    std::vector<Vertex> ball;
    scanner.for_each(v, r, [&](Vertex u) { ball.push_back(u); });
    std::sort(ball.begin(), ball.end());
    return ball;
}

Graph graph_power(const Graph& g, Radius r) {
    if (r == 0) throw ArgumentError("graph_power: radius must be at least 1");
    BallScanner scanner(g);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        scanner.for_each(v, r, [&](Vertex u) {
            if (v < u) edges.emplace_back(v, u);
        });
    }
    return Graph::from_edges(g.num_vertices(), edges, g.labels());
}

Components connected_components(const Graph& g) {
    Components cc;
    cc.component.assign(g.num_vertices(), kUnreachable);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (cc.component[s] != kUnreachable) continue;
        auto id = static_cast<std::uint32_t>(cc.sizes.size());
        cc.sizes.push_back(0);
        cc.component[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            ++cc.sizes[id];
            for (Vertex w : g.neighbors(u)) {
                if (cc.component[w] == kUnreachable) {
                    cc.component[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return cc;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> new_id(g.num_vertices(), kUnreachable);
    for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (Vertex u : keep) {
        labels.push_back(g.label(u));
        for (Vertex w : g.neighbors(u)) {
            if (u < w && new_id[w] != kUnreachable) edges.emplace_back(new_id[u], new_id[w]);
        }
    }
    return Graph::from_edges(keep.size(), edges, std::move(labels));
}

Graph largest_component(const Graph& g) {
    if (g.num_vertices() == 0) throw ArgumentError("largest_component: empty graph");
    Components cc = connected_components(g);
    // Component ids follow smallest member, so the first maximum wins ties.
    auto best = static_cast<std::uint32_t>(
        std::max_element(cc.sizes.begin(), cc.sizes.end()) - cc.sizes.begin());
    std::vector<Vertex> keep;
    keep.reserve(cc.sizes[best]);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (cc.component[v] == best) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

}  // namespace sparsedom
