#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "evdeg/generate.hpp"
#include "evdeg/graph.hpp"
#include "evdeg/indices.hpp"
#include "evdeg/transforms.hpp"

using namespace evdeg;

namespace {

Graph make_family(Family f, int a, int b = 0, double p = 0.0, std::uint64_t seed = 0) {
    FamilySpec s;
    s.family = f;
    s.a = a;
    s.b = b;
    s.p = p;
    s.seed = seed;
    return generate(s);
}

bool share_endpoint(Edge a, Edge b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// Derived-graph oracle straight from the definitions: vertex i keeps id i,
// the edge with rank r becomes vertex n + r.
Graph expected_derived(const Graph& g, bool original, bool incidence, bool line_edges) {
    int n = g.n();
    auto m = static_cast<int>(g.m());
    std::vector<Edge> edges;
    if (original) {
        for (const Edge& e : g.edges()) edges.push_back(e);
    }
    if (incidence) {
        for (int r = 0; r < m; ++r) {
            edges.push_back(make_edge(g.edges()[r].u, n + r));
            edges.push_back(make_edge(g.edges()[r].v, n + r));
        }
    }
    if (line_edges) {
        for (int r = 0; r < m; ++r) {
            for (int s = r + 1; s < m; ++s) {
                if (share_endpoint(g.edges()[r], g.edges()[s])) {
                    edges.push_back(Edge{n + r, n + s});
                }
            }
        }
    }
    return Graph(n + m, edges);
}

Graph expected_line(const Graph& g) {
    auto m = static_cast<int>(g.m());
    std::vector<Edge> edges;
    for (int r = 0; r < m; ++r) {
        for (int s = r + 1; s < m; ++s) {
            if (share_endpoint(g.edges()[r], g.edges()[s])) edges.push_back(Edge{r, s});
        }
    }
    return Graph(m, edges);
}

std::vector<Graph> corpus() {
    std::vector<Graph> out = {
        make_family(Family::path, 2),    make_family(Family::path, 5),
        make_family(Family::cycle, 4),   make_family(Family::cycle, 5),
        make_family(Family::complete, 1), make_family(Family::complete, 4),
        make_family(Family::star, 4),    make_family(Family::complete_bipartite, 2, 3),
    };
    for (std::uint64_t seed : {3ull, 8ull}) {
        out.push_back(make_family(Family::random_gnp, 9, 0, 0.4, seed));
    }
    return out;
}

bool is_cycle_shaped(const Graph& g, int k) {
    if (g.n() != k || g.m() != k || !g.is_connected()) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int start = 0; start < g.n(); ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("small line graphs are the expected families") {
    CHECK(line_graph(make_family(Family::path, 3)) == make_family(Family::complete, 2));
    CHECK(line_graph(make_family(Family::path, 2)) == make_family(Family::complete, 1));
    CHECK(line_graph(make_family(Family::complete, 3)) == make_family(Family::complete, 3));
    CHECK(is_cycle_shaped(line_graph(make_family(Family::cycle, 4)), 4));
    CHECK(line_graph(make_family(Family::star, 3)) == make_family(Family::complete, 3));
    CHECK(line_graph(Graph(3, {})) == Graph(0, {}));
}

TEST_CASE("derived graphs match the definitional oracle") {
    for (const Graph& g : corpus()) {
        CHECK(line_graph(g) == expected_line(g));
        CHECK(subdivision(g) == expected_derived(g, false, true, false));
        CHECK(edge_semitotal(g) == expected_derived(g, false, true, true));
        CHECK(vertex_semitotal(g) == expected_derived(g, true, true, false));
        CHECK(total_graph(g) == expected_derived(g, true, true, true));
    }
}

TEST_CASE("derived graph sizes follow the edge-count laws") {
    for (const Graph& g : corpus()) {
        std::int64_t m = g.m();
        std::int64_t ml = line_graph(g).m();
        CHECK(ml == classic_invariants(g).M1 / 2 - m);
        CHECK(subdivision(g).n() == g.n() + m);
        CHECK(subdivision(g).m() == 2 * m);
        CHECK(edge_semitotal(g).m() == 2 * m + ml);
        CHECK(vertex_semitotal(g).m() == 3 * m);
        CHECK(total_graph(g).m() == 3 * m + ml);
    }
}

TEST_CASE("subdivisions are bipartite and triangle-free") {
    for (const Graph& g : corpus()) {
        Graph sd = subdivision(g);
        CHECK(is_bipartite(sd));
        CHECK(sd.triangle_count() == 0);
        // every subdivision edge joins an original vertex to an edge vertex
        for (const Edge& e : sd.edges()) {
            CHECK(e.u < g.n());
            CHECK(e.v >= g.n());
        }
    }
}

TEST_CASE("subdivision labeling on P3") {
    Graph sd = subdivision(make_family(Family::path, 3));
    CHECK(sd == Graph(5, {Edge{0, 3}, Edge{1, 3}, Edge{1, 4}, Edge{2, 4}}));
}

TEST_CASE("frozen derived-graph index values") {
    CHECK(ev_indices(subdivision(make_family(Family::complete, 2))).Mev == 18);
    CHECK(ev_indices(subdivision(make_family(Family::complete, 3))).Mev == 96);
    CHECK(is_cycle_shaped(subdivision(make_family(Family::complete, 3)), 6));
    CHECK(ev_indices(edge_semitotal(make_family(Family::path, 3))).Mev == 89);
    CHECK(ev_indices(vertex_semitotal(make_family(Family::path, 3))).Mev == 118);
    CHECK(ev_indices(total_graph(make_family(Family::path, 3))).Mev == 157);
    CHECK(total_graph(make_family(Family::complete, 2)) == make_family(Family::complete, 3));
}

TEST_CASE("edgeless inputs pass through") {
    Graph k1(1, {});
    CHECK(total_graph(k1) == k1);
    CHECK(subdivision(k1) == k1);
    CHECK(vertex_semitotal(k1) == k1);
    CHECK(edge_semitotal(k1) == k1);
    CHECK(line_graph(k1) == Graph(0, {}));
}
