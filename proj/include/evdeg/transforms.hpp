#pragma once

#include "evdeg/graph.hpp"

namespace evdeg {

// Derived graphs. All of them label the output the same way: original
// vertex i keeps id i, and the vertex standing for edge rank r gets id
// n + r (the line graph, having no original vertices, uses id r directly).
//
//   line_graph       vertices = edges of g; adjacency = sharing an endpoint
//   subdivision      one vertex per edge, splicing it into its endpoints
//   edge_semitotal   subdivision incidences + line-graph adjacencies
//   vertex_semitotal original edges + subdivision incidences
//   total_graph      original edges + line-graph adjacencies + incidences
Graph line_graph(const Graph& g);
Graph subdivision(const Graph& g);
Graph edge_semitotal(const Graph& g);
Graph vertex_semitotal(const Graph& g);
Graph total_graph(const Graph& g);

}  // namespace evdeg
