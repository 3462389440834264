#pragma once

#include <cstdint>
#include <vector>

namespace evdeg {

// Undirected simple-graph edge, canonically oriented u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(Edge a, Edge b) { return !(a == b); }
    friend bool operator<(Edge a, Edge b) { return a.u != b.u ? a.u < b.u : a.v < b.v; }
};

// Normalizes orientation; throws std::invalid_argument on a loop.
Edge make_edge(int a, int b);

// Immutable simple graph on dense vertex ids 0..n-1.
//
// Canonical representation: the edge list sorted by (u, v) with u < v, plus
// sorted adjacency lists. For moderate n each vertex also gets a bit row so
// common-neighbor counts run word-parallel via popcount; beyond the memory
// cap the code falls back to merging the sorted lists.
class Graph {
public:
    Graph() = default;  // K0
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    std::int64_t m() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // Position of e in the canonical edge list; throws if e is not an edge.
    std::int64_t edge_rank(Edge e) const;

    // Number of triangles containing edge e: |N(u) ∩ N(v)|.
    std::int64_t triangles_on_edge(Edge e) const;
    // Number of triangles containing vertex v: edges inside N(v).
    std::int64_t triangles_at_vertex(int v) const;
    // Total triangle count. The per-edge sum counts each triangle three
    // times; inexact division here would be an internal bug.
    std::int64_t triangle_count() const;

    // d(u) + d(v) - triangles_on_edge(e) = |N[u] ∪ N[v]|, always >= 2.
    std::int64_t ev_degree(Edge e) const;

    bool is_connected() const;  // K0 and K1 count as connected

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v) const;
    std::int64_t common_neighbor_count(int u, int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;  // n_ rows of row_words_ words; empty when capped
    std::size_t row_words_ = 0;
};

}  // namespace evdeg
