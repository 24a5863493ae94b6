#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "untangle/crossings.hpp"
#include "untangle/topology.hpp"

namespace untangle {

/// A graph together with a plane straight-line drawing of it.
struct PlaneGraph {
  PlanarGraph graph;
  Drawing drawing;
};

namespace detail {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace detail

/// Random maximal planar graph: random integer points inside a large
/// triangle, inserted one by one, each splitting the triangle containing it.
/// Vertices 0, 1, 2 are the outer triangle.
inline PlaneGraph random_maximal_planar(int n, std::uint64_t seed) {
  if (n < 3) throw ValidationError("random triangulation needs n >= 3");
  std::mt19937_64 rng(seed);
  const long side = 40L * n;
  std::vector<Point> pos{Point(0, 0), Point(side, 0), Point(0, side)};
  std::vector<std::array<VertexId, 3>> tris{{0, 1, 2}};
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  while (static_cast<int>(pos.size()) < n) {
    const Point p(static_cast<long>(1 + detail::draw_below(rng, side - 2)),
                  static_cast<long>(1 + detail::draw_below(rng, side - 2)));
    std::size_t host = tris.size();
    bool degenerate = false;
    for (std::size_t t = 0; t < tris.size() && host == tris.size(); ++t) {
      const auto& [a, b, c] = tris[t];
      if (strictly_inside_triangle(pos[a], pos[b], pos[c], p)) host = t;
      else if (inside_closed_triangle(pos[a], pos[b], pos[c], p)) degenerate = true;
    }
    if (host == tris.size() || degenerate) continue;  // outside, on an edge, or on a vertex
    const auto v = static_cast<VertexId>(pos.size());
    pos.push_back(p);
    const auto [a, b, c] = tris[host];
    tris[host] = {a, b, v};
    tris.push_back({b, c, v});
    tris.push_back({c, a, v});
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
  }
  return {PlanarGraph(n, std::move(edges)), Drawing(std::move(pos))};
}

/// Random 3-connected planar graph: a random triangulation with up to
/// `removals` random edges deleted, each only if 3-connectivity survives.
inline PlaneGraph random_three_connected_planar(int n, std::uint64_t seed, int removals) {
  auto base = random_maximal_planar(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto edges = base.graph.edges();
  for (int attempt = 0; attempt < 4 * removals && removals > 0; ++attempt) {
    const std::size_t i = detail::draw_below(rng, edges.size());
    auto trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    PlanarGraph g(n, trial);
    if (n >= 4 && is_three_connected(g)) {
      edges = std::move(trial);
      if (--removals == 0) break;
    }
  }
  return {PlanarGraph(n, std::move(edges)), std::move(base.drawing)};
}

/// Uniformly shuffles which vertex sits at which point.
inline Drawing shuffle_positions(const Drawing& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pts = d.positions();
  for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[detail::draw_below(rng, i)]);
  return Drawing(std::move(pts));
}

}  // namespace untangle
