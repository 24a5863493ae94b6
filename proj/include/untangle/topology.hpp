#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "untangle/graph.hpp"

namespace untangle {

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const PlanarGraph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [ed, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, ed, index++);
  }
  return bg;
}

inline bool connected_without(const PlanarGraph& g, VertexId skip_a, VertexId skip_b) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[skip_a] = seen[skip_b] = 1;
  VertexId start = -1;
  int remaining = 0;
  for (VertexId v = 0; v < n; ++v)
    if (!seen[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining == 0) return true;
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == remaining;
}

}  // namespace detail

inline bool is_planar(const PlanarGraph& g) {
  if (g.vertex_count() <= 4) return true;
  if (g.edge_count() > 3 * static_cast<std::size_t>(g.vertex_count()) - 6) return false;
  auto bg = detail::to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Some combinatorial embedding of a planar graph, or nullopt if non-planar.
/// The orientation (clockwise or counter-clockwise) of the returned rotation
/// is unspecified but consistent.
inline std::optional<RotationSystem> planar_embedding(const PlanarGraph& g) {
  auto bg = detail::to_boost(g);
  using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(boost::num_vertices(bg));
  const bool ok = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!ok) return std::nullopt;
  RotationSystem rot(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const auto& ed : embedding[v]) {
      const auto a = static_cast<VertexId>(boost::source(ed, bg));
      const auto b = static_cast<VertexId>(boost::target(ed, bg));
      rot[v].push_back(a == v ? b : a);
    }
  return rot;
}

/// Faces of the embedding given by `rot`, each as its cyclic vertex list.
///
/// Walking dart u->v continues with v->w where w follows u clockwise around v
/// (precedes it in a counter-clockwise rotation), so with a counter-clockwise
/// rotation bounded faces come out counter-clockwise.
inline std::vector<std::vector<VertexId>> trace_faces(const PlanarGraph& g, const RotationSystem& rot) {
  const int n = g.vertex_count();
  std::vector<std::map<VertexId, std::size_t>> pos(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = i;
  std::map<std::pair<VertexId, VertexId>, bool> used;
  std::vector<std::vector<VertexId>> faces;
  for (VertexId u0 = 0; u0 < n; ++u0)
    for (VertexId v0 : rot[u0]) {
      if (used[{u0, v0}]) continue;
      std::vector<VertexId> face;
      VertexId u = u0, v = v0;
      while (!used[{u, v}]) {
        used[{u, v}] = true;
        face.push_back(u);
        const auto& around = rot[v];
        const std::size_t i = pos[v].at(u);
        const VertexId w = around[(i + around.size() - 1) % around.size()];
        u = v;
        v = w;
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

inline std::vector<std::vector<VertexId>> trace_faces(const PlanarGraph& g) {
  if (g.rotation()) return trace_faces(g, *g.rotation());
  auto rot = planar_embedding(g);
  if (!rot) throw ValidationError("graph is not planar");
  return trace_faces(g, *rot);
}

/// V - E + F for the embedding; equals 2 exactly when a connected graph's
/// rotation system describes a plane embedding.
inline long euler_characteristic(const PlanarGraph& g, const RotationSystem& rot) {
  return static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
         static_cast<long>(trace_faces(g, rot).size());
}

inline bool is_connected(const PlanarGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

/// True iff no set of at most two vertices disconnects g (exhaustive).
inline bool is_three_connected(const PlanarGraph& g) {
  const int n = g.vertex_count();
  if (n < 4) throw UndefinedInputError("3-connectivity needs at least 4 vertices");
  if (!is_connected(g)) return false;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a; b < n; ++b)
      if (!detail::connected_without(g, a, b)) return false;
  return true;
}

inline bool is_maximal_planar(const PlanarGraph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw UndefinedInputError("maximal planarity needs at least 3 vertices");
  return g.edge_count() == static_cast<std::size_t>(3 * n - 6) && is_planar(g);
}

/// Counter-clockwise rotation system read off a straight-line drawing.
inline RotationSystem rotation_from_drawing(const PlanarGraph& g, const Drawing& d) {
  require_total(g, d);
  RotationSystem rot(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Point& o = d[v];
    auto upper = [&](VertexId w) {
      const Point& p = d[w];
      return p.y() > o.y() || (p.y() == o.y() && p.x() > o.x());
    };
    auto nb = std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(nb.begin(), nb.end(), [&](VertexId a, VertexId b) {
      const bool ua = upper(a), ub = upper(b);
      if (ua != ub) return ua;
      return orientation(o, d[a], d[b]) > 0;
    });
    rot[v] = std::move(nb);
  }
  return rot;
}

}  // namespace untangle
