#include "lp_writer.hpp"

#include <cctype>

namespace sparsedom::detail {

std::vector<std::string> lp_vertex_names(const Graph& g) {
    bool usable = g.has_labels();
    for (const auto& label : g.labels()) {
        for (unsigned char c : label) {
            if (!std::isalnum(c) && c != '_') usable = false;
        }
    }
    std::vector<std::string> names(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        names[v] = usable ? g.label(v) : std::to_string(v);
    }
    return names;
}

void LpRow::term(std::int64_t coef, const std::string& name) {
    std::string text;
    if (first_) {
        text = coef < 0 ? "- " : "";
    } else {
        text = coef < 0 ? "- " : "+ ";
    }
    text += std::to_string(coef < 0 ? -coef : coef) + " " + name;
    raw(text);
}

void LpRow::raw(const std::string& text) {
    if (width_ + text.size() > 200) {
        out_ << "\n   ";
        width_ = 0;
    }
    out_ << ' ' << text;
    width_ += text.size() + 1;
    first_ = false;
}

void LpRow::finish(const std::string& tail) {
    if (!tail.empty()) out_ << ' ' << tail;
    out_ << '\n';
}

}  // namespace sparsedom::detail
