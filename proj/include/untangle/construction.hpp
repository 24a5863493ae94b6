#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "untangle/crossings.hpp"
#include "untangle/graph.hpp"
#include "untangle/sequences.hpp"
#include "untangle/topology.hpp"

namespace untangle {

enum class TriangulationStyle { stacked, strip };

inline std::string to_string(TriangulationStyle s) { return s == TriangulationStyle::stacked ? "stacked" : "strip"; }

inline TriangulationStyle parse_style(const std::string& s) {
  if (s == "stacked") return TriangulationStyle::stacked;
  if (s == "strip") return TriangulationStyle::strip;
  throw ValidationError("unknown triangulation style '" + s + "'");
}

/// Maximal planar graph on k vertices with a plane layout in local
/// coordinates. Vertices 0, 1, 2 form the outer triangle and sit at (0,0),
/// (1,0), (0,1); every other vertex lies strictly inside it.
struct ClusterTriangulation {
  PlanarGraph graph;
  std::vector<Point> layout;
};

namespace detail {

inline Point centroid(const Point& a, const Point& b, const Point& c) {
  return Rational(1, 3) * (a + b + c);
}

// Vertex i >= 3 goes into face (0, 1, i-1).
inline ClusterTriangulation stacked_triangulation(int k) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  std::vector<Point> pos{Point(0, 0), Point(1, 0), Point(0, 1)};
  for (int i = 3; i < k; ++i) {
    e.emplace_back(i, 0);
    e.emplace_back(i, 1);
    e.emplace_back(i, i - 1);
    pos.push_back(centroid(pos[0], pos[1], pos[i - 1]));
  }
  return {PlanarGraph(k, std::move(e)), std::move(pos)};
}

// Nested triangles joined by octahedral bands; each layer is the previous
// one inverted and shrunk by 1/4 about the centroid. Up to two leftover
// vertices fill the innermost triangle. Maximum degree 6.
inline ClusterTriangulation strip_triangulation(int k) {
  const int layers = k / 3;
  const int rest = k % 3;
  const Point c = centroid(Point(0, 0), Point(1, 0), Point(0, 1));
  std::vector<Point> pos{Point(0, 0), Point(1, 0), Point(0, 1)};
  std::vector<Edge> e;
  Rational scale(1);
  for (int layer = 0; layer < layers; ++layer) {
    const int base = 3 * layer;
    if (layer > 0) {
      scale *= Rational(-1, 4);
      for (int t = 0; t < 3; ++t) pos.push_back(c + scale * (pos[t] - c));
      const int prev = base - 3;
      for (int t = 0; t < 3; ++t) {
        e.emplace_back(base + t, prev + (t + 1) % 3);
        e.emplace_back(base + t, prev + (t + 2) % 3);
      }
    }
    e.emplace_back(base, base + 1);
    e.emplace_back(base + 1, base + 2);
    e.emplace_back(base, base + 2);
  }
  const int last = 3 * (layers - 1);
  if (rest >= 1) {
    const int u = 3 * layers;
    pos.push_back(c);
    for (int t = 0; t < 3; ++t) e.emplace_back(u, last + t);
    if (rest == 2) {
      const int w = u + 1;
      pos.push_back(centroid(pos[u], pos[last + 1], pos[last + 2]));
      e.emplace_back(w, u);
      e.emplace_back(w, last + 1);
      e.emplace_back(w, last + 2);
    }
  }
  return {PlanarGraph(k, std::move(e)), std::move(pos)};
}

}  // namespace detail

inline ClusterTriangulation cluster_triangulation(int k, TriangulationStyle style) {
  if (k < 3) throw UndefinedInputError("cluster triangulation needs k >= 3");
  return style == TriangulationStyle::stacked ? detail::stacked_triangulation(k) : detail::strip_triangulation(k);
}

inline PlanarGraph build_cluster_triangulation(int k, TriangulationStyle style = TriangulationStyle::stacked) {
  return cluster_triangulation(k, style).graph;
}

/// Points in strictly convex position, listed counter-clockwise along the
/// boundary of their hull.
class ConvexPointSet {
 public:
  ConvexPointSet() = default;

  /// Validates strict convexity and counter-clockwise order.
  explicit ConvexPointSet(std::vector<Point> points) : pts_(std::move(points)) {
    const std::size_t n = pts_.size();
    if (n < 3) throw ValidationError("convex point set needs at least 3 points");
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = pts_[i];
      const Point& b = pts_[(i + 1) % n];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == (i + 1) % n) continue;
        if (orientation(a, b, pts_[j]) <= 0)
          throw ValidationError("points are not in strictly convex counter-clockwise position (edge " +
                                std::to_string(i) + ", point " + std::to_string(j) + ")");
      }
    }
  }

  std::size_t size() const { return pts_.size(); }
  const Point& operator[](std::size_t i) const { return pts_.at(i); }
  const std::vector<Point>& points() const { return pts_; }

 private:
  std::vector<Point> pts_;
};

enum class ConvexLayout { parabola, circle };

/// Default: integer points (i, i^2). `circle` puts rational points on a
/// circle of the given radius via the tangent half-angle parametrisation.
inline ConvexPointSet convex_positions(int n, ConvexLayout layout = ConvexLayout::parabola, long radius = 1000) {
  if (n < 3) throw ValidationError("convex_positions needs n >= 3");
  std::vector<Point> pts;
  if (layout == ConvexLayout::parabola) {
    for (long i = 0; i < n; ++i) pts.emplace_back(i, i * i);
  } else {
    const long q = 100000;
    for (int i = 0; i < n; ++i) {
      const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (i + 0.5) / n;
      const Rational t(static_cast<long>(std::llround(std::tan(theta / 2.0) * q)), q);
      const Rational den = 1 + t * t;
      pts.emplace_back(Rational(radius) * (1 - t * t) / den, Rational(radius) * 2 * t / den);
    }
  }
  return ConvexPointSet(std::move(pts));
}

enum class FamilyKind { chain, square };

/// Construction parameters. chain(k, s): s + k clusters of k vertices;
/// square(k): k clusters of k vertices.
struct Family {
  FamilyKind kind = FamilyKind::square;
  int k = 3;
  int s = 0;
  TriangulationStyle style = TriangulationStyle::stacked;

  int cluster_count() const { return kind == FamilyKind::chain ? s + k : k; }
  int vertex_count() const { return cluster_count() * k; }
  std::string name() const { return kind == FamilyKind::chain ? "chain" : "square"; }
  std::string tag() const {
    return kind == FamilyKind::chain ? "chain(" + std::to_string(k) + "," + std::to_string(s) + ")"
                                     : "square(" + std::to_string(k) + ")";
  }
  friend bool operator==(const Family&, const Family&) = default;
};

/// A clustered graph from one of the builders, plus its bad drawing once
/// one has been assigned.
struct ClusteredInstance {
  Family family;
  PlanarGraph graph;
  std::vector<std::vector<VertexId>> clusters;
  /// Outer triangle (a, b, c) of each cluster's triangulation.
  std::vector<std::array<VertexId, 3>> outer_triangles;
  std::optional<ConvexPointSet> points;
  std::optional<Drawing> bad_drawing;

  int cluster_size() const { return family.k; }
  int cluster_count() const { return static_cast<int>(clusters.size()); }
  int vertex_count() const { return graph.vertex_count(); }

  /// Cluster index (0-based) of every vertex.
  std::vector<int> cluster_of() const {
    std::vector<int> out(static_cast<std::size_t>(vertex_count()), -1);
    for (int i = 0; i < cluster_count(); ++i)
      for (VertexId v : clusters[i]) out[v] = i;
    return out;
  }
};

namespace detail {

// Cluster i occupies a slim triangle on a ring: a outward, b toward cluster
// i-1, c toward cluster i+1. Local cluster coordinates (l1, l2) map to
// a + l1 (b - a) + l2 (c - a).
inline Drawing ring_layout(const Family& f, const std::vector<ClusterTriangulation>& parts) {
  const int m = f.cluster_count();
  const double radius = 1000.0;
  const double w = radius * std::sin(std::numbers::pi / m) * 0.3;
  std::vector<Point> pos;
  for (int i = 0; i < m; ++i) {
    const double th = 2.0 * std::numbers::pi * i / m;
    const double rx = std::cos(th), ry = std::sin(th);
    const double tx = -ry, ty = rx;
    const double cx = radius * rx, cy = radius * ry;
    auto exact = [](double x, double y) { return Point(Rational(x), Rational(y)); };
    const Point a = exact(cx + rx * w, cy + ry * w);
    const Point b = exact(cx - tx * w - rx * 2 * w, cy - ty * w - ry * 2 * w);
    const Point c = exact(cx + tx * w - rx * 2 * w, cy + ty * w - ry * 2 * w);
    for (const Point& l : parts[i].layout) pos.push_back(a + l.x() * (b - a) + l.y() * (c - a));
  }
  return Drawing(std::move(pos));
}

inline ClusteredInstance build_clustered(const Family& f) {
  if (f.k < 3) throw ValidationError("cluster size k must be at least 3");
  if (f.kind == FamilyKind::chain && f.s < 1) throw ValidationError("chain family needs s >= 1");
  const int k = f.k, m = f.cluster_count();
  ClusteredInstance inst;
  inst.family = f;
  const auto part = cluster_triangulation(k, f.style);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const VertexId base = i * k;
    std::vector<VertexId> members;
    for (int j = 0; j < k; ++j) members.push_back(base + j);
    inst.clusters.push_back(std::move(members));
    inst.outer_triangles.push_back({base, base + 1, base + 2});
    for (const Edge& e : part.graph.edges()) edges.emplace_back(base + e.u, base + e.v);
  }
  auto a = [&](int i) { return inst.outer_triangles[i][0]; };
  auto b = [&](int i) { return inst.outer_triangles[i][1]; };
  auto c = [&](int i) { return inst.outer_triangles[i][2]; };
  // Two vertex-disjoint edges between consecutive clusters, one closing edge.
  for (int i = 0; i + 1 < m; ++i) {
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(c(i), b(i + 1));
  }
  edges.emplace_back(c(m - 1), b(0));
  inst.graph = PlanarGraph(m * k, edges);

  if (!is_three_connected(inst.graph)) {
    std::vector<Edge> extra{{a(m - 1), a(0)}};
    for (int i = 0; i + 1 < m; ++i) extra.emplace_back(a(i), b(i + 1));
    for (const Edge& e : extra) {
      if (inst.graph.has_edge(e.u, e.v)) continue;
      auto trial = edges;
      trial.push_back(e);
      PlanarGraph g(m * k, trial);
      if (!is_planar(g)) continue;
      edges = std::move(trial);
      inst.graph = std::move(g);
      if (is_three_connected(inst.graph)) break;
    }
    if (!is_three_connected(inst.graph)) throw InternalError("could not make " + f.tag() + " 3-connected");
  }
  return inst;
}

}  // namespace detail

/// s + k clusters of k vertices, consecutive clusters joined by two
/// vertex-disjoint edges between their outer triangles, plus one edge
/// closing the chain. Planar and 3-connected.
inline ClusteredInstance build_chain_graph(int k, int s, TriangulationStyle style = TriangulationStyle::stacked) {
  return detail::build_clustered({FamilyKind::chain, k, s, style});
}

/// k clusters of k vertices with the chain connection scheme; n = k^2.
inline ClusteredInstance build_square_graph(int k, TriangulationStyle style = TriangulationStyle::stacked) {
  return detail::build_clustered({FamilyKind::square, k, 0, style});
}

inline ClusteredInstance build_family(const Family& f) { return detail::build_clustered(f); }

/// Interleaved assignment: member j of cluster i goes to boundary point
/// i + j*m, so walking the boundary reads the cluster labels 1..m, k times.
inline Drawing assign_bad_drawing(const ClusteredInstance& inst, const ConvexPointSet& x) {
  const int m = inst.cluster_count(), k = inst.cluster_size();
  if (x.size() != static_cast<std::size_t>(m * k))
    throw ValidationError("point set has " + std::to_string(x.size()) + " points, instance has " +
                          std::to_string(m * k) + " vertices");
  std::vector<Point> pos(static_cast<std::size_t>(m * k));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) pos[inst.clusters[i][j]] = x[static_cast<std::size_t>(i + j * m)];
  return Drawing(std::move(pos));
}

inline ClusteredInstance with_bad_drawing(ClusteredInstance inst, ConvexPointSet x) {
  inst.bad_drawing = assign_bad_drawing(inst, x);
  inst.points = std::move(x);
  return inst;
}

/// Builder + interleaved bad drawing on `convex_positions(n, layout)`.
inline ClusteredInstance make_instance(const Family& f, ConvexLayout layout = ConvexLayout::parabola) {
  auto inst = build_family(f);
  auto pts = convex_positions(inst.vertex_count(), layout);
  return with_bad_drawing(std::move(inst), std::move(pts));
}

/// Plane straight-line drawing of the instance with the clusters on a ring,
/// each in the outer face of the others. Verified crossing-free.
inline Drawing reference_layout(const ClusteredInstance& inst) {
  std::vector<ClusterTriangulation> parts(static_cast<std::size_t>(inst.cluster_count()),
                                          cluster_triangulation(inst.cluster_size(), inst.family.style));
  auto d = detail::ring_layout(inst.family, parts);
  if (!is_plane_drawing(inst.graph, d)) throw InternalError("reference layout of " + inst.family.tag() + " is not plane");
  return d;
}

/// The instance graph carrying the (counter-clockwise) rotation system of
/// its reference layout.
inline PlanarGraph reference_embedding(const ClusteredInstance& inst) {
  return inst.graph.with_rotation(rotation_from_drawing(inst.graph, reference_layout(inst)));
}

}  // namespace untangle
