#pragma once

#include "evdeg/graph.hpp"

namespace evdeg {

// Binary constructions. Vertex labeling conventions, fixed so outputs are
// byte-reproducible:
//   disjoint_union    g keeps its ids, h is shifted by n(g)
//   join              union labeling plus all cross edges
//   cartesian/composition/tensor
//                     pair (i, j) -> i * n(h) + j
//   corona            g keeps 0..n(g)-1; copy i of h starts at n(g) + i*n(h)
//
// composition(g, h) is the lexicographic product g[h]; the argument order
// matters, unlike the other products here.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph composition(const Graph& g, const Graph& h);
Graph corona(const Graph& g, const Graph& h);
Graph tensor_product(const Graph& g, const Graph& h);

}  // namespace evdeg
