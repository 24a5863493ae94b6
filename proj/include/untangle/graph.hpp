#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"

namespace untangle {

using VertexId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool incident(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Per-vertex cyclic order of neighbours; encodes a combinatorial embedding.
using RotationSystem = std::vector<std::vector<VertexId>>;

/// Simple undirected graph on vertices 0..n-1, optionally carrying a
/// rotation system. Immutable after construction.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  PlanarGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw ValidationError("negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u < 0 || e.v >= n_) throw ValidationError("edge endpoint out of range");
      if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
      if (i > 0 && edges_[i - 1] == e)
        throw ValidationError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  PlanarGraph(int vertex_count, std::vector<Edge> edges, RotationSystem rotation)
      : PlanarGraph(vertex_count, std::move(edges)) {
    set_rotation(std::move(rotation));
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const {
    int best = 0;
    for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  bool has_edge(VertexId a, VertexId b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  const std::optional<RotationSystem>& rotation() const { return rotation_; }

  /// Same graph with the given rotation system attached.
  PlanarGraph with_rotation(RotationSystem rotation) const {
    PlanarGraph g = *this;
    g.set_rotation(std::move(rotation));
    return g;
  }

  /// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
  PlanarGraph induced(std::span<const VertexId> vertices) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
    std::vector<Edge> sub;
    for (const Edge& e : edges_)
      if (index[e.u] >= 0 && index[e.v] >= 0) sub.emplace_back(index[e.u], index[e.v]);
    return PlanarGraph(static_cast<int>(vertices.size()), std::move(sub));
  }

  friend bool operator==(const PlanarGraph& a, const PlanarGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void set_rotation(RotationSystem rotation) {
    if (rotation.size() != static_cast<std::size_t>(n_)) throw ValidationError("rotation size mismatch");
    for (VertexId v = 0; v < n_; ++v) {
      auto sorted = rotation[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != adj_[v])
        throw ValidationError("rotation at vertex " + std::to_string(v) + " does not list its incident edges");
    }
    rotation_ = std::move(rotation);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::optional<RotationSystem> rotation_;
};

/// Assignment of a point to every vertex. Drawings are meant to be
/// injective; `is_injective` checks it because callers may hand in anything.
class Drawing {
 public:
  Drawing() = default;
  explicit Drawing(std::vector<Point> positions) : pos_(std::move(positions)) {}

  std::size_t size() const { return pos_.size(); }
  const Point& operator[](VertexId v) const { return pos_.at(static_cast<std::size_t>(v)); }
  void set(VertexId v, Point p) { pos_.at(static_cast<std::size_t>(v)) = std::move(p); }
  const std::vector<Point>& positions() const { return pos_; }

  /// Vertex currently at `p`, if any.
  std::optional<VertexId> occupant(const Point& p) const {
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (pos_[i] == p) return static_cast<VertexId>(i);
    return std::nullopt;
  }

  bool is_injective() const {
    std::vector<const Point*> sorted;
    sorted.reserve(pos_.size());
    for (const auto& p : pos_) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (*sorted[i - 1] == *sorted[i]) return false;
    return true;
  }

  friend bool operator==(const Drawing& a, const Drawing& b) { return a.pos_ == b.pos_; }

 private:
  std::vector<Point> pos_;
};

inline void require_total(const PlanarGraph& g, const Drawing& d) {
  if (d.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError("drawing has " + std::to_string(d.size()) + " positions for " +
                          std::to_string(g.vertex_count()) + " vertices");
}

// Small named graphs used throughout tests and tools.

inline PlanarGraph complete_graph(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return PlanarGraph(n, std::move(e));
}

inline PlanarGraph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
  return PlanarGraph(n, std::move(e));
}

/// Wheel with hub 0 and rim 1..n-1 in cyclic order.
inline PlanarGraph wheel_graph(int n) {
  std::vector<Edge> e;
  for (int a = 1; a < n; ++a) {
    e.emplace_back(0, a);
    e.emplace_back(a, a + 1 < n ? a + 1 : 1);
  }
  return PlanarGraph(n, std::move(e));
}

}  // namespace untangle
