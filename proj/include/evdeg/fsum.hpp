#pragma once

#include <string>

#include "evdeg/graph.hpp"

namespace evdeg {

// Which derived graph F(g) anchors the sum.
enum class FKind { sd, esto, vsto, to };

// F-sum of g and h. Vertex set is (V(g) union E(g)) x V(h); vertex (a, j)
// gets id a * n(h) + j, where a is the id of that vertex in F(g) (original
// vertex i -> i, edge rank r -> n(g) + r). Edges: a copy of h along each
// column over an ORIGINAL vertex of g (edge-columns carry none), plus a
// copy of F(g) inside each layer j.
//
// f_sum(g, K1, kind) therefore reproduces F(g) exactly, ids included.
Graph f_sum(const Graph& g, const Graph& h, FKind kind);

std::string fkind_name(FKind kind);

}  // namespace evdeg
