#include <sstream>

#include "lp_writer.hpp"
#include "sparsedom/partition.hpp"

namespace sparsedom {

std::string export_qp(const Graph& g, std::span<const Vertex> landmarks) {
    CompactKernel ck = build_compact_kernel(g, landmarks);
    auto stems = detail::lp_vertex_names(g);
    const std::size_t pieces = ck.landmarks.size();
    const std::size_t bags = ck.num_bags();
    auto var = [&](std::size_t u, std::size_t b) {
        return "x_" + stems[ck.landmarks[u]] + "_" + stems[ck.representative[b]];
    };

    std::ostringstream out;
    out << "\\ balanced neighborhood partitioning, " << pieces << " landmarks, " << bags << " bags\n";
    out << "Minimize\n";
    {
        // (sum_b w_b x_ub)^2 expanded; LP format halves the bracketed terms.
        detail::LpRow row(out, "obj: [");
        for (std::size_t u = 0; u < pieces; ++u) {
            for (std::size_t b = 0; b < bags; ++b) {
                auto wb = static_cast<std::int64_t>(ck.members[b].size());
                row.term(2 * wb * wb, var(u, b) + " ^ 2");
                for (std::size_t c = b + 1; c < bags; ++c) {
                    auto wc = static_cast<std::int64_t>(ck.members[c].size());
                    row.term(4 * wb * wc, var(u, b) + " * " + var(u, c));
                }
            }
        }
        row.finish("] / 2");
    }
    out << "Subject To\n";
    for (std::size_t b = 0; b < bags; ++b) {
        detail::LpRow row(out, "t_" + stems[ck.representative[b]] + ":");
        for (std::size_t u = 0; u < pieces; ++u) row.term(1, var(u, b));
        row.finish("= 1");
    }
    for (std::size_t b = 0; b < bags; ++b) {
        if (ck.landmark_index[b] != kUnreachable) continue;
        for (std::size_t u = 0; u < pieces; ++u) {
            detail::LpRow row(out, "s_" + stems[ck.landmarks[u]] + "_" + stems[ck.representative[b]] + ":");
            for (std::uint32_t parent : ck.dag.in.row(b)) row.term(1, var(u, parent));
            row.term(-1, var(u, b));
            row.finish(">= 0");
        }
    }
    out << "Bounds\n";
    for (std::size_t b = 0; b < bags; ++b) {
        if (ck.landmark_index[b] == kUnreachable) continue;
        for (std::size_t u = 0; u < pieces; ++u) {
            out << ' ' << var(u, b) << " = " << (u == ck.landmark_index[b] ? 1 : 0) << '\n';
        }
    }
    out << "Binary\n";
    for (std::size_t u = 0; u < pieces; ++u) {
        for (std::size_t b = 0; b < bags; ++b) out << ' ' << var(u, b) << '\n';
    }
    out << "End\n";
    return out.str();
}

}  // namespace sparsedom
