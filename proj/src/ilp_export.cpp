#include <algorithm>
#include <sstream>

#include "lp_writer.hpp"
#include "sparsedom/domset.hpp"
#include "sparsedom/errors.hpp"

namespace sparsedom {

std::string export_ilp(const Graph& g, Radius r, IlpObjective objective) {
    if (r == 0) throw ArgumentError("export_ilp: radius must be at least 1");
    const std::size_t n = g.num_vertices();
    auto stems = detail::lp_vertex_names(g);
    std::vector<std::string> var(n);
    for (std::size_t v = 0; v < n; ++v) var[v] = "x_" + stems[v];

    std::ostringstream out;
    out << "\\ minimum " << (objective == IlpObjective::size ? "size" : "average congestion")
        << " " << r << "-dominating set, n=" << n << " m=" << g.num_edges() << "\n";
    out << "Minimize\n";
    {
        detail::LpRow row(out, "obj:");
        BallScanner scanner(g);
        for (Vertex v = 0; v < n; ++v) {
            std::int64_t coef = objective == IlpObjective::size
                                    ? 1
                                    : static_cast<std::int64_t>(scanner.ball_size(v, r));
            row.term(coef, var[v]);
        }
        row.finish("");
    }
    out << "Subject To\n";
    BallScanner scanner(g);
    std::vector<Vertex> ball;
    for (Vertex v = 0; v < n; ++v) {
        ball.clear();
        scanner.for_each(v, r, [&](Vertex u) { ball.push_back(u); });
        std::sort(ball.begin(), ball.end());
        detail::LpRow row(out, "c_" + stems[v] + ":");
        for (Vertex w : ball) row.term(1, var[w]);
        row.finish(">= 1");
    }
    out << "Binary\n";
    for (Vertex v = 0; v < n; ++v) out << ' ' << var[v] << '\n';
    out << "End\n";
    return out.str();
}

}  // namespace sparsedom
