#include "evdeg/transforms.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace evdeg {

namespace {

// Pairs of edge ranks that share an endpoint, i.e. the line graph's edges.
// Distinct simple-graph edges share at most one endpoint, so no pair is
// produced twice.
std::vector<Edge> adjacent_edge_pairs(const Graph& g, int offset) {
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.n()));
    for (std::int64_t r = 0; r < g.m(); ++r) {
        const Edge& e = g.edges()[static_cast<std::size_t>(r)];
        incident[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(r));
        incident[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(r));
    }
    std::vector<Edge> out;
    for (const auto& ranks : incident) {
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            for (std::size_t j = i + 1; j < ranks.size(); ++j) {
                out.push_back(Edge{offset + ranks[i], offset + ranks[j]});
            }
        }
    }
    return out;
}

std::vector<Edge> incidence_edges(const Graph& g) {
    std::vector<Edge> out;
    for (std::int64_t r = 0; r < g.m(); ++r) {
        const Edge& e = g.edges()[static_cast<std::size_t>(r)];
        int ev = g.n() + static_cast<int>(r);
        out.push_back(Edge{e.u, ev});
        out.push_back(Edge{e.v, ev});
    }
    return out;
}

int checked_total(const Graph& g) {
    std::int64_t total = g.n() + g.m();
    if (total > INT32_MAX) {
        throw std::overflow_error("derived graph too large");
    }
    return static_cast<int>(total);
}

}  // namespace

Graph line_graph(const Graph& g) {
    if (g.m() > INT32_MAX) {
        throw std::overflow_error("line graph too large");
    }
    return Graph(static_cast<int>(g.m()), adjacent_edge_pairs(g, 0));
}

Graph subdivision(const Graph& g) {
    int total = checked_total(g);
    return Graph(total, incidence_edges(g));
}

Graph edge_semitotal(const Graph& g) {
    int total = checked_total(g);
    std::vector<Edge> edges = incidence_edges(g);
    auto rank_pairs = adjacent_edge_pairs(g, g.n());
    edges.insert(edges.end(), rank_pairs.begin(), rank_pairs.end());
    return Graph(total, std::move(edges));
}

Graph vertex_semitotal(const Graph& g) {
    int total = checked_total(g);
    std::vector<Edge> edges = g.edges();
    auto inc = incidence_edges(g);
    edges.insert(edges.end(), inc.begin(), inc.end());
    return Graph(total, std::move(edges));
}

Graph total_graph(const Graph& g) {
    int total = checked_total(g);
    std::vector<Edge> edges = g.edges();
    auto inc = incidence_edges(g);
    edges.insert(edges.end(), inc.begin(), inc.end());
    auto rank_pairs = adjacent_edge_pairs(g, g.n());
    edges.insert(edges.end(), rank_pairs.begin(), rank_pairs.end());
    return Graph(total, std::move(edges));
}

}  // namespace evdeg
