#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sparsedom/graph.hpp"

namespace sparsedom::detail {

/// Variable-name stems for LP files: vertex labels when every label is a
/// legal LP identifier fragment, decimal ids otherwise.
std::vector<std::string> lp_vertex_names(const Graph& g);

/// Accumulates "coef name" terms and wraps lines before they grow too long
/// for fixed-width LP readers.
class LpRow {
public:
    explicit LpRow(std::ostringstream& out, std::string head) : out_(out) { out_ << ' ' << head; }

    void term(std::int64_t coef, const std::string& name);
    void raw(const std::string& text);
    void finish(const std::string& tail);

private:
    std::ostringstream& out_;
    std::size_t width_ = 0;
    bool first_ = true;
};

}  // namespace sparsedom::detail
