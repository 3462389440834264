#include "evdeg/fsum.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "evdeg/transforms.hpp"

namespace evdeg {

Graph f_sum(const Graph& g, const Graph& h, FKind kind) {
    Graph fg;
    switch (kind) {
        case FKind::sd: fg = subdivision(g); break;
        case FKind::esto: fg = edge_semitotal(g); break;
        case FKind::vsto: fg = vertex_semitotal(g); break;
        case FKind::to: fg = total_graph(g); break;
    }

    std::int64_t total64 = static_cast<std::int64_t>(fg.n()) * h.n();
    if (total64 > INT32_MAX) {
        throw std::overflow_error("F-sum graph too large");
    }
    int total = static_cast<int>(total64);

    std::vector<Edge> edges;
    for (int a = 0; a < g.n(); ++a) {
        for (const Edge& e : h.edges()) {
            edges.push_back(Edge{a * h.n() + e.u, a * h.n() + e.v});
        }
    }
    for (const Edge& e : fg.edges()) {
        for (int j = 0; j < h.n(); ++j) {
            edges.push_back(Edge{e.u * h.n() + j, e.v * h.n() + j});
        }
    }
    return Graph(total, std::move(edges));
}

std::string fkind_name(FKind kind) {
    switch (kind) {
        case FKind::sd: return "sd";
        case FKind::esto: return "esto";
        case FKind::vsto: return "vsto";
        case FKind::to: return "to";
    }
    return "unknown";
}

}  // namespace evdeg
