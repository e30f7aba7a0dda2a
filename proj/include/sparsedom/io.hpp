#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sparsedom/graph.hpp"
#include "sparsedom/partition.hpp"

namespace sparsedom {

/// One vertex label per line; '#' comments and blank lines skipped. Throws
/// ParseError on labels the graph does not know.
std::vector<Vertex> read_vertex_set(const Graph& g, std::istream& in);
std::vector<Vertex> read_vertex_set_file(const Graph& g, const std::string& path);
void write_vertex_set(const Graph& g, std::span<const Vertex> s, std::ostream& out);

/// "vertex_label landmark_label" per line. Vertices without a line stay
/// unassigned; a landmark label outside `landmarks` is a ParseError.
Partition read_partition(const Graph& g, std::span<const Vertex> landmarks, std::istream& in);
Partition read_partition_file(const Graph& g, std::span<const Vertex> landmarks, const std::string& path);
void write_partition(const Graph& g, const Partition& p, std::ostream& out);

}  // namespace sparsedom
