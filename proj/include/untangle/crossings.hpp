#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "untangle/graph.hpp"

namespace untangle {

/// Two straight-line edges conflict when their closed segments meet at a
/// point other than a shared endpoint. Collinear overlap is a conflict.
inline bool edges_conflict(const Edge& e, const Edge& f, const Drawing& d) {
  if (e == f) return false;
  VertexId shared = -1;
  if (e.incident(f.u)) shared = f.u;
  if (e.incident(f.v)) shared = f.v;
  if (shared >= 0) {
    return segments_overlap_from_shared(d[shared], d[e.other(shared)], d[f.other(shared)]);
  }
  return segments_intersect(d[e.u], d[e.v], d[f.u], d[f.v]);
}

/// Vertex w sits in the relative interior of the non-incident edge e.
inline bool vertex_on_edge(VertexId w, const Edge& e, const Drawing& d) {
  if (e.incident(w)) return false;
  return in_segment_interior(d[e.u], d[e.v], d[w]);
}

/// Conflicting edge pairs plus vertex/edge incidences (a vertex lying inside
/// a non-incident edge). Zero exactly for crossing-free drawings.
inline std::size_t count_crossings(const PlanarGraph& g, const Drawing& d) {
  require_total(g, d);
  const auto& E = g.edges();
  std::size_t total = 0;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j)
      if (edges_conflict(E[i], E[j], d)) ++total;
  for (VertexId w = 0; w < g.vertex_count(); ++w)
    for (const Edge& e : E)
      if (vertex_on_edge(w, e, d)) ++total;
  return total;
}

/// The terms of count_crossings that mention vertex v: pairs with an edge
/// incident to v, and incidences whose vertex is v or whose edge touches v.
/// Moving v changes only these terms.
inline std::size_t crossings_involving(const PlanarGraph& g, const Drawing& d, VertexId v) {
  require_total(g, d);
  const auto& E = g.edges();
  std::size_t total = 0;
  for (VertexId a : g.neighbors(v)) {
    const Edge e(v, a);
    for (const Edge& f : E) {
      if (f == e) continue;
      // Pairs of two v-edges would be seen twice; keep the ordered one.
      if (f.incident(v) && !(e < f)) continue;
      if (edges_conflict(e, f, d)) ++total;
    }
  }
  for (const Edge& e : E) {
    if (e.incident(v)) {
      for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (vertex_on_edge(w, e, d)) ++total;
    } else if (vertex_on_edge(v, e, d)) {
      ++total;
    }
  }
  return total;
}

/// Conflicting edge pairs, for display.
inline std::vector<std::pair<Edge, Edge>> crossing_pairs(const PlanarGraph& g, const Drawing& d) {
  require_total(g, d);
  const auto& E = g.edges();
  std::vector<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j)
      if (edges_conflict(E[i], E[j], d)) out.emplace_back(E[i], E[j]);
  return out;
}

inline bool is_plane_drawing(const PlanarGraph& g, const Drawing& d) {
  require_total(g, d);
  return d.is_injective() && count_crossings(g, d) == 0;
}

}  // namespace untangle
