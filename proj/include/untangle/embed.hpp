#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "untangle/bounds.hpp"
#include "untangle/crossings.hpp"
#include "untangle/topology.hpp"

namespace untangle {

struct Move {
  VertexId v = 0;
  Point to;
  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

namespace detail {

inline bool same_cycle(const std::vector<VertexId>& face, const std::vector<VertexId>& cycle) {
  if (face.size() != cycle.size()) return false;
  const std::size_t n = face.size();
  for (std::size_t r = 0; r < n; ++r)
    for (int dir : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const std::size_t j = dir > 0 ? (r + i) % n : (r + n - i) % n;
        ok = face[j] == cycle[i];
      }
      if (ok) return true;
    }
  return false;
}

// Points in the given cyclic order form a strictly convex polygon (either
// orientation).
inline bool strictly_convex_polygon(std::vector<Point> pts) {
  if (pts.size() < 3) return false;
  if (orientation(pts[0], pts[1], pts[2]) < 0) std::reverse(pts.begin(), pts.end());
  try {
    ConvexPointSet check(std::move(pts));
  } catch (const ValidationError&) {
    return false;
  }
  return true;
}

// Solves M x = b for the symmetric diagonally dominant system of the
// averaging equations, exactly.
inline void solve_exact(std::vector<std::vector<Rational>>& a, std::vector<Rational>& bx, std::vector<Rational>& by) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular averaging system");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(bx[piv], bx[col]);
      std::swap(by[piv], by[col]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j)
        if (a[col][j] != 0) a[row][j] -= f * a[col][j];
      bx[row] -= f * bx[col];
      by[row] -= f * by[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] != 0) {
        bx[i] -= a[i][j] * bx[j];
        by[i] -= a[i][j] * by[j];
      }
    bx[i] /= a[i][i];
    by[i] /= a[i][i];
  }
}

}  // namespace detail

struct EmbedOptions {
  /// Positive weight per edge, aligned with g.edges(); empty means all 1.
  std::vector<long> weights;
  /// Re-check the output with is_plane_drawing and throw if it fails.
  bool verify = true;
};

/// Faces of some plane embedding of g (its own rotation if present).
inline std::vector<std::vector<VertexId>> embedding_faces(const PlanarGraph& g) { return trace_faces(g); }

/// Tutte's barycentric embedding: the outer face is pinned to a convex
/// polygon and every other vertex sits at the (weighted) average of its
/// neighbours. For a 3-connected planar graph the result is plane.
inline Drawing barycentric_embed(const PlanarGraph& g, const std::vector<VertexId>& outer_face,
                                 const std::vector<Point>& outer_positions, const EmbedOptions& opt = {}) {
  const int n = g.vertex_count();
  if (outer_face.size() != outer_positions.size())
    throw ValidationError("outer face and its positions differ in length");
  if (outer_face.size() < 3) throw ValidationError("outer face needs at least 3 vertices");
  if (!detail::strictly_convex_polygon(outer_positions))
    throw ValidationError("outer positions are not a strictly convex polygon");
  std::vector<int> pinned(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < outer_face.size(); ++i) {
    const VertexId v = outer_face[i];
    if (v < 0 || v >= n) throw ValidationError("outer face vertex out of range");
    if (pinned[v] >= 0) throw ValidationError("outer face repeats a vertex");
    pinned[v] = static_cast<int>(i);
  }
  {
    bool is_face = false;
    for (const auto& f : embedding_faces(g)) is_face = is_face || detail::same_cycle(f, outer_face);
    if (!is_face) throw ValidationError("outer cycle is not a face of the embedding");
  }
  if (!opt.weights.empty() && opt.weights.size() != g.edge_count())
    throw ValidationError("one weight per edge expected");

  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> interior;
  for (VertexId v = 0; v < n; ++v)
    if (pinned[v] < 0) {
      index[v] = static_cast<int>(interior.size());
      interior.push_back(v);
    }
  const std::size_t m = interior.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> bx(m, Rational(0)), by(m, Rational(0));
  const auto& E = g.edges();
  for (std::size_t ei = 0; ei < E.size(); ++ei) {
    const Rational w(opt.weights.empty() ? 1L : opt.weights[ei]);
    if (w <= 0) throw ValidationError("edge weights must be positive");
    for (auto [v, u] : {std::pair{E[ei].u, E[ei].v}, std::pair{E[ei].v, E[ei].u}}) {
      if (index[v] < 0) continue;
      a[index[v]][index[v]] += w;
      if (index[u] >= 0) {
        a[index[v]][index[u]] -= w;
      } else {
        const Point& p = outer_positions[pinned[u]];
        bx[index[v]] += w * p.x();
        by[index[v]] += w * p.y();
      }
    }
  }
  detail::solve_exact(a, bx, by);

  std::vector<Point> pos(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v)
    pos[v] = pinned[v] >= 0 ? outer_positions[pinned[v]] : Point(bx[index[v]], by[index[v]]);
  Drawing d(std::move(pos));
  if (opt.verify && !is_plane_drawing(g, d)) throw InternalError("barycentric embedding is not plane");
  return d;
}

/// Convex polygon for `face` keeping face[0] and face[1] at p0 and p1; the
/// remaining vertices go on a parabolic arc left of p0 -> p1.
inline std::vector<Point> polygon_on_edge(std::size_t face_size, const Point& p0, const Point& p1) {
  std::vector<Point> out{p0, p1};
  const Point dir = p1 - p0;
  const Point normal(-dir.y(), dir.x());
  const auto L = static_cast<long>(face_size);
  for (long j = 2; j < L; ++j) {
    const Rational t(j - 1, L - 1);
    out.push_back(p1 + t * (p0 - p1) + Rational(2) * t * (1 - t) * normal);
  }
  return out;
}

struct UntangleResult {
  Drawing drawing;
  FixReport report;
  std::vector<VertexId> pinned_face;
  /// True when no facial triangle had non-collinear positions and only two
  /// vertices were kept.
  bool fallback = false;
};

/// Keeps one facial triangle exactly where `bad` has it (lexicographically
/// smallest non-degenerate one) and embeds the rest barycentrically, so at
/// most n-3 vertices move. A mirrored embedding has the same faces, so the
/// triangle's orientation needs no separate handling.
inline UntangleResult untangle_fixing_face(const PlanarGraph& g, const Drawing& bad) {
  require_total(g, bad);
  if (g.vertex_count() < 4) {
    if (g.vertex_count() == 3 && is_plane_drawing(g, bad)) return {bad, count_fixed(bad, bad), {0, 1, 2}, false};
    throw UndefinedInputError("untangling needs a 3-connected graph");
  }
  if (!is_planar(g)) throw ValidationError("graph is not planar");
  if (!is_three_connected(g)) throw ValidationError("graph is not 3-connected");
  auto faces = embedding_faces(g);
  std::vector<std::vector<VertexId>> triangles;
  for (const auto& f : faces)
    if (f.size() == 3) {
      auto t = f;
      std::sort(t.begin(), t.end());
      triangles.push_back(t);
    }
  std::sort(triangles.begin(), triangles.end());
  UntangleResult r;
  for (const auto& t : triangles)
    if (orientation(bad[t[0]], bad[t[1]], bad[t[2]]) != 0) {
      r.pinned_face = t;
      r.drawing = barycentric_embed(g, t, {bad[t[0]], bad[t[1]], bad[t[2]]});
      r.report = count_fixed(bad, r.drawing);
      return r;
    }
  // Fallback: keep the two endpoints of the smallest edge on some face.
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  auto face = faces.front();
  std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
  r.fallback = true;
  r.pinned_face = face;
  auto polygon = polygon_on_edge(face.size(), bad[face[0]], bad[face[1]]);
  r.drawing = barycentric_embed(g, face, polygon);
  r.report = count_fixed(bad, r.drawing);
  return r;
}

/// One randomized plane redrawing that tries to keep many vertices of
/// `bad`: pin a random face (at its `bad` positions when they are convex,
/// else on a random edge), embed with random weights, then put vertices
/// back to their `bad` positions in random order whenever that keeps the
/// drawing plane.
inline Drawing random_plane_redraw(const PlanarGraph& g, const Drawing& bad, std::mt19937_64& rng,
                                   const std::vector<std::vector<VertexId>>& faces) {
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  auto face = faces[pick(faces.size())];
  std::rotate(face.begin(), face.begin() + static_cast<std::ptrdiff_t>(pick(face.size())), face.end());
  std::vector<Point> polygon;
  for (VertexId v : face) polygon.push_back(bad[v]);
  if (!detail::strictly_convex_polygon(polygon)) polygon = polygon_on_edge(face.size(), bad[face[0]], bad[face[1]]);
  EmbedOptions opt;
  for (std::size_t i = 0; i < g.edge_count(); ++i) opt.weights.push_back(1 + static_cast<long>(pick(3)));
  Drawing d = barycentric_embed(g, face, polygon, opt);

  std::vector<VertexId> order(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<VertexId>(i);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[pick(i)]);
  for (VertexId v : order) {
    if (d[v] == bad[v] || d.occupant(bad[v])) continue;
    Point old = d[v];
    d.set(v, bad[v]);
    if (crossings_involving(g, d, v) != 0) d.set(v, std::move(old));
  }
  return d;
}

inline Drawing random_plane_redraw(const PlanarGraph& g, const Drawing& bad, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_plane_redraw(g, bad, rng, embedding_faces(g));
}

/// Moves that turn `start` into `target`, one vertex at a time, never
/// landing on an occupied point. Vertices whose targets are all blocked by
/// each other (cycles) take a detour through a free staging point.
inline MoveSequence extract_moves(const Drawing& start, const Drawing& target) {
  if (start.size() != target.size()) throw ValidationError("drawings cover different vertex sets");
  if (!target.is_injective()) throw ValidationError("target drawing is not injective");
  if (!start.is_injective()) throw ValidationError("start drawing is not injective");
  Drawing cur = start;
  std::vector<VertexId> pending;
  for (std::size_t v = 0; v < start.size(); ++v)
    if (start[static_cast<VertexId>(v)] != target[static_cast<VertexId>(v)]) pending.push_back(static_cast<VertexId>(v));

  auto is_target = [&](const Point& p) {
    for (const auto& q : target.positions())
      if (q == p) return true;
    return false;
  };
  auto staging_point = [&](VertexId v) {
    for (long j = 2;; ++j) {
      const Point p = cur[v] + Rational(1, j) * (target[v] - cur[v]);
      if (!cur.occupant(p) && !is_target(p)) return p;
    }
  };

  MoveSequence moves;
  while (!pending.empty()) {
    bool progressed = false;
    for (std::size_t i = 0; i < pending.size();) {
      const VertexId v = pending[i];
      if (!cur.occupant(target[v])) {
        cur.set(v, target[v]);
        moves.push_back({v, target[v]});
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
        progressed = true;
      } else {
        ++i;
      }
    }
    if (!progressed) {
      const VertexId v = pending.front();
      Point p = staging_point(v);
      cur.set(v, p);
      moves.push_back({v, std::move(p)});
    }
  }
  return moves;
}

/// Replays moves from `start`, rejecting any that lands on an occupied point.
inline Drawing apply_moves(Drawing d, const MoveSequence& moves) {
  for (const auto& mv : moves) {
    if (mv.v < 0 || static_cast<std::size_t>(mv.v) >= d.size()) throw ValidationError("move of unknown vertex");
    if (d.occupant(mv.to)) throw MoveRejected("move onto an occupied point");
    d.set(mv.v, mv.to);
  }
  return d;
}

}  // namespace untangle
