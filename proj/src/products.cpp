#include "evdeg/products.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace evdeg {

namespace {

int checked_size(std::int64_t n) {
    if (n > INT32_MAX) {
        throw std::overflow_error("product graph too large");
    }
    return static_cast<int>(n);
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    int total = checked_size(static_cast<std::int64_t>(g.n()) + h.n());
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) {
        edges.push_back(Edge{g.n() + e.u, g.n() + e.v});
    }
    return Graph(total, std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
    int total = checked_size(static_cast<std::int64_t>(g.n()) + h.n());
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) {
        edges.push_back(Edge{g.n() + e.u, g.n() + e.v});
    }
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < h.n(); ++j) {
            edges.push_back(Edge{i, g.n() + j});
        }
    }
    return Graph(total, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int total = checked_size(static_cast<std::int64_t>(g.n()) * h.n());
    std::vector<Edge> edges;
    for (int i = 0; i < g.n(); ++i) {
        for (const Edge& e : h.edges()) {
            edges.push_back(Edge{i * h.n() + e.u, i * h.n() + e.v});
        }
    }
    for (const Edge& e : g.edges()) {
        for (int j = 0; j < h.n(); ++j) {
            edges.push_back(Edge{e.u * h.n() + j, e.v * h.n() + j});
        }
    }
    return Graph(total, std::move(edges));
}

Graph composition(const Graph& g, const Graph& h) {
    int total = checked_size(static_cast<std::int64_t>(g.n()) * h.n());
    std::vector<Edge> edges;
    for (int i = 0; i < g.n(); ++i) {
        for (const Edge& e : h.edges()) {
            edges.push_back(Edge{i * h.n() + e.u, i * h.n() + e.v});
        }
    }
    for (const Edge& e : g.edges()) {
        for (int j = 0; j < h.n(); ++j) {
            for (int k = 0; k < h.n(); ++k) {
                edges.push_back(Edge{e.u * h.n() + j, e.v * h.n() + k});
            }
        }
    }
    return Graph(total, std::move(edges));
}

Graph corona(const Graph& g, const Graph& h) {
    int total = checked_size(static_cast<std::int64_t>(g.n()) * (1 + static_cast<std::int64_t>(h.n())));
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < g.n(); ++i) {
        int base = g.n() + i * h.n();
        for (const Edge& e : h.edges()) {
            edges.push_back(Edge{base + e.u, base + e.v});
        }
        for (int j = 0; j < h.n(); ++j) {
            edges.push_back(Edge{i, base + j});
        }
    }
    return Graph(total, std::move(edges));
}

Graph tensor_product(const Graph& g, const Graph& h) {
    int total = checked_size(static_cast<std::int64_t>(g.n()) * h.n());
    std::vector<Edge> edges;
    for (const Edge& eg : g.edges()) {
        for (const Edge& eh : h.edges()) {
            edges.push_back(Edge{eg.u * h.n() + eh.u, eg.v * h.n() + eh.v});
            edges.push_back(Edge{eg.u * h.n() + eh.v, eg.v * h.n() + eh.u});
        }
    }
    return Graph(total, std::move(edges));
}

}  // namespace evdeg
