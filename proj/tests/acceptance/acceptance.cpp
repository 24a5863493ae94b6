// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "untangle/bounds.hpp"
#include "untangle/embed.hpp"
#include "untangle/game.hpp"
#include "untangle/generators.hpp"

using namespace untangle;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds) o.fail("took " + std::to_string(secs) + " s");
  if (!o.pass) ++failures;
  std::printf("%s %s: %s(%.2f s", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(), secs);
  if (limit_seconds > 0) std::printf(", limit %.0f s", limit_seconds);
  std::printf(")\n");
  std::fflush(stdout);
}

// Longest xyxy-free subsequence by enumerating every subset. A subsequence
// of a circular sequence contains x..y..x..y cyclically iff the labels
// x, y alternate at least four times around it.
std::size_t brute_force_max_free(const std::vector<int>& seq) {
  const std::size_t n = seq.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(seq[i]);
    bool free = true;
    for (int x = 1; x <= 8 && free; ++x)
      for (int y = x + 1; y <= 8 && free; ++y) {
        std::vector<int> xy;
        for (int c : sub)
          if (c == x || c == y) xy.push_back(c);
        std::size_t changes = 0;
        for (std::size_t i = 0; i < xy.size(); ++i) changes += xy[i] != xy[(i + 1) % xy.size()] ? 1 : 0;
        if (changes >= 4) free = false;
      }
    if (free) best = size;
  }
  return best;
}

std::vector<Family> chain_and_square(std::initializer_list<int> ks, std::initializer_list<int> ss) {
  std::vector<Family> out;
  for (int k : ks)
    for (int s : ss) out.push_back({FamilyKind::chain, k, s});
  for (int k : ks) out.push_back({FamilyKind::square, k});
  return out;
}

std::vector<Family> with_both_styles(const std::vector<Family>& fs) {
  std::vector<Family> out;
  for (auto f : fs) {
    f.style = TriangulationStyle::stacked;
    out.push_back(f);
    f.style = TriangulationStyle::strip;
    out.push_back(f);
  }
  return out;
}

std::string label(const Family& f) { return f.tag() + "/" + to_string(f.style); }

}  // namespace

int main() {
  criterion("circle_sequence_bound", 60, [](Outcome& o) {
    int cases = 0;
    for (int k = 1; k <= 4; ++k)
      for (int s = 1; s <= 4; ++s) {
        if (k * s > 16) continue;
        ++cases;
        const auto seq = make_block_sequence({k, s});
        const auto oracle = brute_force_max_free(seq.labels());
        const auto search = max_xyxy_free_length(seq).length;
        if (oracle != search)
          o.fail("S(" + std::to_string(k) + "," + std::to_string(s) + "): search " + std::to_string(search) +
                 " vs brute force " + std::to_string(oracle));
        if (oracle >= static_cast<std::size_t>(k + s))
          o.fail("S(" + std::to_string(k) + "," + std::to_string(s) + "): max free length " + std::to_string(oracle) +
                 " >= k+s");
      }
    if (o.pass) o.detail << cases << " block sequences, brute-force max < k+s in every case ";
  });

  criterion("construction_validity", 30, [](Outcome& o) {
    int built = 0;
    for (const auto& f : with_both_styles(chain_and_square({3, 4}, {1, 2, 3}))) {
      const auto inst = make_instance(f);
      ++built;
      if (!is_planar(inst.graph)) o.fail(label(f) + " not planar");
      if (!is_three_connected(inst.graph)) o.fail(label(f) + " not 3-connected");
      for (const auto& c : inst.clusters)
        if (!is_maximal_planar(inst.graph.induced(c))) o.fail(label(f) + " has a cluster that is not maximal planar");
      if (!(label_sequence(inst) == make_block_sequence({inst.cluster_count(), inst.cluster_size()})))
        o.fail(label(f) + " label sequence is not the block sequence");
    }
    if (o.pass) o.detail << built << " instances planar, 3-connected, maximal planar clusters, block labels ";
  });

  criterion("square_certificate", 0, [](Outcome& o) {
    for (int k : {3, 4, 5}) {
      const auto cert = certified_fixed_upper_bound(make_instance({FamilyKind::square, k}));
      const int n = k * k;
      if (cert.certified_fixed_upper != 2 * k + 1)
        o.fail("k=" + std::to_string(k) + ": fixed upper " + std::to_string(cert.certified_fixed_upper));
      // 2k+1 <= 2 sqrt(n) + 1  <=>  (2k)^2 <= 4n
      if ((cert.certified_fixed_upper - 1) * (cert.certified_fixed_upper - 1) > 4 * n)
        o.fail("k=" + std::to_string(k) + ": bound exceeds 2 sqrt(n) + 1");
      if (o.pass) o.detail << "k=" << k << " fixed<=" << cert.certified_fixed_upper << " ";
    }
  });

  criterion("chain_certificate", 0, [](Outcome& o) {
    const auto inst = make_instance({FamilyKind::chain, 3, 2});
    const auto cert = certified_fixed_upper_bound(inst);
    const int k = 3, n = inst.vertex_count();
    const Rational formula = (Rational(1) - Rational(1, k)) * n - k * k + k;
    if (cert.certified_moved_lower != 4) o.fail("moved lower " + std::to_string(cert.certified_moved_lower));
    if (formula != cert.certified_moved_lower) o.fail("(1-1/k)n-k^2+k = " + formula.get_str());
    if (o.pass) o.detail << "chain(3,2) n=" << n << " moved>=" << cert.certified_moved_lower << " ";
  });

  criterion("mutual_consistency", 0, [](Outcome& o) {
    std::size_t checked = 0, max_persistent = 0;
    for (const auto& f : chain_and_square({3, 4}, {1, 2, 3})) {
      const auto inst = make_instance(f);
      const auto cert = certified_fixed_upper_bound(inst);
      const auto& bad = *inst.bad_drawing;
      auto check = [&](const Drawing& d, const std::string& what) {
        const auto v = verify_redraw(inst, cert, d);
        ++checked;
        if (!v.plane) o.fail(f.tag() + " " + what + ": redraw not plane");
        if (!v.within_fixed_bound)
          o.fail(f.tag() + " " + what + ": fixed " + std::to_string(v.report.fixed_count) + " > " +
                 std::to_string(cert.certified_fixed_upper));
        if (!v.persistence_ok)
          o.fail(f.tag() + " " + what + ": " + std::to_string(*v.persistent_count) + " persistent clusters");
        if (v.persistent_count) max_persistent = std::max(max_persistent, *v.persistent_count);
      };
      check(untangle_fixing_face(inst.graph, bad).drawing, "untangle");
      const auto faces = embedding_faces(inst.graph);
      for (const auto& face : faces) {
        check(barycentric_embed(inst.graph, face,
                                convex_positions(static_cast<int>(face.size()), ConvexLayout::circle).points()),
              "barycentric");
        std::vector<Point> at_bad;
        for (VertexId v : face) at_bad.push_back(bad[v]);
        try {
          check(barycentric_embed(inst.graph, face, at_bad), "barycentric-pinned");
        } catch (const ValidationError&) {
          // face not convex in the bad drawing
        }
      }
      std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(f.vertex_count()));
      for (int i = 0; i < 1000; ++i) check(random_plane_redraw(inst.graph, bad, rng, faces), "random");
    }
    if (o.pass) o.detail << checked << " plane redraws, 0 violations, max persistent clusters " << max_persistent << " ";
  });

  criterion("constructive_upper_bound", 120, [](Outcome& o) {
    std::vector<Family> standard;
    for (int k = 3; k * k <= 49; ++k) {
      standard.push_back({FamilyKind::square, k});
      for (int s = 1; k * (s + k) <= 49; ++s) standard.push_back({FamilyKind::chain, k, s});
    }
    int instances = 0;
    for (const auto& f : with_both_styles(standard)) {
      const auto inst = make_instance(f);
      const auto r = untangle_fixing_face(inst.graph, *inst.bad_drawing);
      ++instances;
      if (count_crossings(inst.graph, r.drawing) != 0) o.fail(label(f) + " untangled drawing has crossings");
      if (r.report.fixed_count < 3) o.fail(label(f) + " fixed only " + std::to_string(r.report.fixed_count));
    }
    int random_ok = 0;
    for (int i = 0; i < 50; ++i) {
      const int n = 4 + i % 47;
      const auto pg = random_three_connected_planar(n, 500 + static_cast<std::uint64_t>(i), n / 4);
      const auto faces = embedding_faces(pg.graph);
      const auto& face = faces[static_cast<std::size_t>(i) % faces.size()];
      const auto d = barycentric_embed(pg.graph, face,
                                       convex_positions(static_cast<int>(face.size()), ConvexLayout::circle).points());
      if (is_plane_drawing(pg.graph, d)) ++random_ok;
      else o.fail("random graph " + std::to_string(i) + " (n=" + std::to_string(n) + ") not plane");
    }
    if (o.pass)
      o.detail << instances << " standard instances up to n=49 untangled with >=3 fixed; " << random_ok
               << "/50 random 3-connected embeddings plane ";
  });

  criterion("game_engine", 0, [](Outcome& o) {
    int games = 0;
    for (const auto& f : chain_and_square({3, 4}, {1, 2, 3}))
      for (auto layout : {ConvexLayout::circle, ConvexLayout::parabola}) {
        auto s = new_game(GeneratedSource{f, layout});
        for (const auto& m : solver_plan(s)) s = apply_move(s, m.v, m.to);
        const auto sc = score(s);
        ++games;
        if (!sc.solved) o.fail(f.tag() + " not solved by the solver plan");
        if (!sc.certified_moved_lower || sc.moves_used < static_cast<std::size_t>(*sc.certified_moved_lower))
          o.fail(f.tag() + " used " + std::to_string(sc.moves_used) + " moves, below the certificate");
        if (s.crossings != count_crossings(s.graph, s.current)) o.fail(f.tag() + " crossing count drifted");
      }
    // Fuzz: random destinations biased towards degenerate positions (edge
    // midpoints, collinear extensions) so both crossing terms are exercised.
    std::size_t moves = 0, degenerate_hits = 0;
    for (const GameSource& src : {GameSource{GeneratedSource{{FamilyKind::chain, 3, 2}, ConvexLayout::parabola}},
                                  GameSource{ScrambledSource{20, 11}}}) {
      auto s = new_game(src);
      std::mt19937_64 rng(99);
      const auto& E = s.graph.edges();
      int applied = 0;
      while (applied < 500) {
        const auto v = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(s.graph.vertex_count()));
        const auto& e = E[rng() % E.size()];
        Point p;
        switch (rng() % 3) {
          case 0: p = Rational(1, 2) * (s.current[e.u] + s.current[e.v]); break;
          case 1: p = Rational(2) * s.current[e.u] - s.current[e.v]; break;
          default: p = Point(static_cast<long>(rng() % 60) - 10, static_cast<long>(rng() % 60) - 10);
        }
        if (s.current.occupant(p)) continue;
        s = apply_move(s, v, p);
        ++applied;
        ++moves;
        const auto full = count_crossings(s.graph, s.current);
        if (s.crossings != full) {
          o.fail("incremental " + std::to_string(s.crossings) + " != full " + std::to_string(full) + " after move " +
                 std::to_string(applied));
          break;
        }
        for (const auto& f : E)
          if (!f.incident(v) && in_segment_interior(s.current[f.u], s.current[f.v], s.current[v])) ++degenerate_hits;
      }
    }
    if (o.pass)
      o.detail << games << " certified games solved above their bound; " << moves
               << " fuzz moves with incremental == full (" << degenerate_hits << " vertex-on-edge positions) ";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
