#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "untangle/construction.hpp"
#include "untangle/crossings.hpp"
#include "untangle/sequences.hpp"

namespace untangle {

struct FixReport {
  int fixed_count = 0;
  int moved_count = 0;
  std::vector<VertexId> fixed_vertices;
};

/// Vertices whose position is exactly the same in both drawings.
inline FixReport count_fixed(const Drawing& before, const Drawing& after) {
  if (before.size() != after.size())
    throw ValidationError("drawings cover different vertex sets (" + std::to_string(before.size()) + " vs " +
                          std::to_string(after.size()) + ")");
  FixReport r;
  for (std::size_t v = 0; v < before.size(); ++v)
    if (before[static_cast<VertexId>(v)] == after[static_cast<VertexId>(v)])
      r.fixed_vertices.push_back(static_cast<VertexId>(v));
  r.fixed_count = static_cast<int>(r.fixed_vertices.size());
  r.moved_count = static_cast<int>(before.size()) - r.fixed_count;
  return r;
}

namespace detail {

// Orders points counter-clockwise around their centroid and checks that the
// result is strictly convex.
inline std::vector<std::size_t> convex_order(const std::vector<Point>& pts) {
  if (pts.size() < 3) throw ValidationError("need at least 3 points for a convex boundary");
  Rational cx(0), cy(0);
  for (const auto& p : pts) {
    cx += p.x();
    cy += p.y();
  }
  const Rational n(static_cast<long>(pts.size()));
  const Point o(cx / n, cy / n);
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto upper = [&](const Point& p) { return p.y() > o.y() || (p.y() == o.y() && p.x() > o.x()); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const bool ua = upper(pts[a]), ub = upper(pts[b]);
    if (ua != ub) return ua;
    return orientation(o, pts[a], pts[b]) > 0;
  });
  std::vector<Point> ordered;
  for (std::size_t i : idx) ordered.push_back(pts[i]);
  ConvexPointSet check(std::move(ordered));  // throws if not strictly convex
  return idx;
}

}  // namespace detail

/// Cluster labels (1-based) of the bad drawing's points in boundary order.
inline CircularSequence label_sequence(const ClusteredInstance& inst) {
  if (!inst.bad_drawing) throw ValidationError("instance has no bad drawing");
  const Drawing& d = *inst.bad_drawing;
  const auto owner = inst.cluster_of();
  std::vector<int> labels;
  if (inst.points) {
    const auto& x = *inst.points;
    if (x.size() != d.size()) throw ValidationError("bad drawing is not on the instance's convex point set");
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto v = d.occupant(x[j]);
      if (!v) throw ValidationError("bad drawing is not on the instance's convex point set");
      labels.push_back(owner[*v] + 1);
    }
    if (!d.is_injective()) throw ValidationError("bad drawing is not injective");
  } else {
    for (std::size_t i : detail::convex_order(d.positions())) labels.push_back(owner[i] + 1);
  }
  return CircularSequence(std::move(labels));
}

enum class BoundMethod { persistence, circle_lemma };

inline std::string to_string(BoundMethod m) { return m == BoundMethod::persistence ? "persistence" : "circle_lemma"; }

inline BoundMethod default_method(const Family& f) {
  return f.kind == FamilyKind::chain ? BoundMethod::persistence : BoundMethod::circle_lemma;
}

struct BoundCertificate {
  Family family;
  int vertex_count = 0;
  CircularSequence label_sequence;
  BoundMethod method = BoundMethod::circle_lemma;
  int certified_fixed_upper = 0;
  int certified_moved_lower = 0;
};

/// Checks that `inst` is exactly what the standard builder and interleaving
/// produce; certificates are only sound for those.
inline void require_standard(const ClusteredInstance& inst) {
  const auto reference = build_family(inst.family);
  if (!(reference.graph == inst.graph) || reference.clusters != inst.clusters)
    throw UnsupportedInstanceError("instance graph differs from the standard " + inst.family.tag() + " construction");
  if (!inst.bad_drawing) throw UnsupportedInstanceError("instance has no bad drawing");
  const auto labels = label_sequence(inst);
  const auto expected = make_block_sequence({inst.cluster_count(), inst.cluster_size()});
  if (!(labels == expected) && !(labels.reversed() == expected))
    throw UnsupportedInstanceError("bad drawing does not follow the interleaved assignment");
}

/// Upper bound on the number of vertices any plane straight-line redrawing
/// can keep in place.
///
/// circle_lemma: points kept by a plane redrawing, labelled by cluster and
/// with the (possible) enclosing cluster split into three labels, form an
/// xyxy-free subsequence of S^{m+2,k}; hence at most m + k + 1 are kept.
/// persistence (chain only): at most k-1 clusters other than the enclosing
/// one keep two vertices, so at least s(k-1) vertices move.
inline BoundCertificate certified_fixed_upper_bound(const ClusteredInstance& inst, std::optional<BoundMethod> method = {}) {
  require_standard(inst);
  BoundCertificate c;
  c.family = inst.family;
  c.vertex_count = inst.vertex_count();
  c.label_sequence = label_sequence(inst);
  c.method = method.value_or(default_method(inst.family));
  const int m = inst.cluster_count(), k = inst.cluster_size(), n = inst.vertex_count();
  if (c.method == BoundMethod::circle_lemma) {
    c.certified_fixed_upper = m + k + 1;
    c.certified_moved_lower = n - c.certified_fixed_upper;
  } else {
    if (inst.family.kind != FamilyKind::chain)
      throw UnsupportedInstanceError("the persistence bound applies to chain instances only");
    c.certified_moved_lower = inst.family.s * (k - 1);
    c.certified_fixed_upper = n - c.certified_moved_lower;
  }
  return c;
}

/// A cluster whose outer triangle, as drawn in `after`, contains a vertex of
/// another cluster. In a plane redrawing at most one cluster can do so.
inline std::optional<int> exceptional_cluster(const ClusteredInstance& inst, const Drawing& after) {
  const auto owner = inst.cluster_of();
  for (int i = 0; i < inst.cluster_count(); ++i) {
    const auto& t = inst.outer_triangles[i];
    const Point &a = after[t[0]], &b = after[t[1]], &c = after[t[2]];
    if (orientation(a, b, c) == 0) continue;
    for (VertexId v = 0; v < inst.vertex_count(); ++v)
      if (owner[v] != i && inside_closed_triangle(a, b, c, after[v])) return i;
  }
  return std::nullopt;
}

/// Clusters (0-based) that keep at least two vertices where the bad drawing
/// put them. One cluster is left out: in a plane redrawing the enclosing
/// cluster if there is one, otherwise (and for non-plane drawings) the last.
inline std::set<int> persistent_clusters(const ClusteredInstance& inst, const Drawing& after) {
  if (!inst.bad_drawing) throw ValidationError("instance has no bad drawing");
  const Drawing& before = *inst.bad_drawing;
  if (before.size() != after.size()) throw ValidationError("redrawing covers a different vertex set");
  int excluded = inst.cluster_count() - 1;
  if (is_plane_drawing(inst.graph, after)) excluded = exceptional_cluster(inst, after).value_or(excluded);
  std::set<int> out;
  for (int i = 0; i < inst.cluster_count(); ++i) {
    if (i == excluded) continue;
    int kept = 0;
    for (VertexId v : inst.clusters[i]) kept += before[v] == after[v] ? 1 : 0;
    if (kept >= 2) out.insert(i);
  }
  return out;
}

/// Pairs of clusters whose outer triangles overlap in `after`; a diagnostic
/// only, not part of any certificate.
inline std::vector<std::pair<int, int>> overlapping_cluster_triangles(const ClusteredInstance& inst, const Drawing& after) {
  auto overlap = [&](const std::array<VertexId, 3>& s, const std::array<VertexId, 3>& t) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (segments_intersect(after[s[i]], after[s[(i + 1) % 3]], after[t[j]], after[t[(j + 1) % 3]])) return true;
    return inside_closed_triangle(after[s[0]], after[s[1]], after[s[2]], after[t[0]]) ||
           inside_closed_triangle(after[t[0]], after[t[1]], after[t[2]], after[s[0]]);
  };
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < inst.cluster_count(); ++i)
    for (int j = i + 1; j < inst.cluster_count(); ++j)
      if (overlap(inst.outer_triangles[i], inst.outer_triangles[j])) out.emplace_back(i, j);
  return out;
}

struct RedrawVerdict {
  FixReport report;
  bool plane = false;
  bool within_fixed_bound = false;
  std::optional<std::size_t> persistent_count;  // chain instances only
  bool persistence_ok = true;

  bool ok() const { return plane && within_fixed_bound && persistence_ok; }
};

/// Checks a redrawing against a certificate. The bound is only claimed for
/// plane redrawings; `within_fixed_bound` is reported regardless.
inline RedrawVerdict verify_redraw(const ClusteredInstance& inst, const BoundCertificate& cert, const Drawing& redraw) {
  if (!inst.bad_drawing) throw ValidationError("instance has no bad drawing");
  RedrawVerdict v;
  v.report = count_fixed(*inst.bad_drawing, redraw);
  v.plane = is_plane_drawing(inst.graph, redraw);
  v.within_fixed_bound = v.report.fixed_count <= cert.certified_fixed_upper;
  if (inst.family.kind == FamilyKind::chain) {
    v.persistent_count = persistent_clusters(inst, redraw).size();
    v.persistence_ok = *v.persistent_count <= static_cast<std::size_t>(inst.cluster_size() - 1);
  }
  return v;
}

struct BoundRow {
  int k = 0, s = 0, n = 0;
  int moved_lower = 0;  // s(k-1) = (1-1/k)n - k^2 + k
  int fixed_upper = 0;  // m + k + 1 with m = s + k
};

inline BoundRow bound_row(int k, int s) {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (s < 1) throw ValidationError("s must be >= 1");
  const int n = k * (s + k);
  return {k, s, n, s * (k - 1), (s + k) + k + 1};
}

inline std::vector<BoundRow> bound_table(int kmax, int smax) {
  std::vector<BoundRow> rows;
  for (int k = 2; k <= kmax; ++k)
    for (int s = 1; s <= smax; ++s) rows.push_back(bound_row(k, s));
  return rows;
}

}  // namespace untangle
