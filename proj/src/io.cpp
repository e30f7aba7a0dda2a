#include "sparsedom/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sparsedom/errors.hpp"

namespace sparsedom {

namespace {

bool skip_line(const std::string& line) {
    std::size_t first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

Vertex lookup(const Graph& g, const std::string& label, std::size_t line) {
    Vertex v = g.find_label(label);
    if (v == kUnreachable) throw ParseError(line, "label '" + label + "' is not a vertex of the graph");
    return v;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    return in;
}

}  // namespace

std::vector<Vertex> read_vertex_set(const Graph& g, std::istream& in) {
    std::vector<Vertex> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (skip_line(line)) continue;
        std::istringstream fields(line);
        std::string label, extra;
        fields >> label;
        if (fields >> extra) throw ParseError(number, "expected one vertex label per line");
        out.push_back(lookup(g, label, number));
    }
    return out;
}

std::vector<Vertex> read_vertex_set_file(const Graph& g, const std::string& path) {
    auto in = open(path);
    return read_vertex_set(g, in);
}

void write_vertex_set(const Graph& g, std::span<const Vertex> s, std::ostream& out) {
    for (Vertex v : s) out << g.label(v) << '\n';
}

Partition read_partition(const Graph& g, std::span<const Vertex> landmarks, std::istream& in) {
    Partition p;
    p.landmarks.assign(landmarks.begin(), landmarks.end());
    p.owner.assign(g.num_vertices(), kUnassigned);
    std::vector<std::uint32_t> index_of(g.num_vertices(), kUnassigned);
    for (std::uint32_t i = 0; i < landmarks.size(); ++i) index_of[landmarks[i]] = i;

    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (skip_line(line)) continue;
        std::istringstream fields(line);
        std::string vertex, landmark, extra;
        if (!(fields >> vertex >> landmark) || (fields >> extra)) {
            throw ParseError(number, "expected 'vertex landmark'");
        }
        Vertex v = lookup(g, vertex, number);
        Vertex u = lookup(g, landmark, number);
        if (index_of[u] == kUnassigned) throw ParseError(number, "'" + landmark + "' is not a landmark");
        p.owner[v] = index_of[u];
    }
    return p;
}

Partition read_partition_file(const Graph& g, std::span<const Vertex> landmarks, const std::string& path) {
    auto in = open(path);
    return read_partition(g, landmarks, in);
}

void write_partition(const Graph& g, const Partition& p, std::ostream& out) {
    for (Vertex v = 0; v < p.owner.size(); ++v) {
        if (p.owner[v] == kUnassigned) continue;
        out << g.label(v) << ' ' << g.label(p.landmark_of(v)) << '\n';
    }
}

}  // namespace sparsedom
