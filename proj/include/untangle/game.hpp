#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "untangle/bounds.hpp"
#include "untangle/construction.hpp"
#include "untangle/crossings.hpp"
#include "untangle/embed.hpp"
#include "untangle/generators.hpp"

namespace untangle {

enum class GameStatus { in_progress, solved };

inline std::string to_string(GameStatus s) { return s == GameStatus::solved ? "solved" : "in_progress"; }

/// A Planarity Game session. `current` is always `start` with `history`
/// applied, and `crossings` is count_crossings(graph, current).
struct GameState {
  PlanarGraph graph;
  Drawing start;
  Drawing current;
  MoveSequence history;
  std::optional<BoundCertificate> bound;
  std::optional<ClusteredInstance> instance;
  std::size_t crossings = 0;
  GameStatus status = GameStatus::in_progress;
  std::string source;
};

struct GeneratedSource {
  Family family;
  ConvexLayout layout = ConvexLayout::circle;
};

struct ScrambledSource {
  int n = 12;
  std::uint64_t seed = 1;
};

struct DrawingSource {
  PlanarGraph graph;
  Drawing drawing;
  std::string label = "custom";
};

struct InstanceSource {
  ClusteredInstance instance;
};

using GameSource = std::variant<GeneratedSource, ScrambledSource, DrawingSource, InstanceSource>;

namespace detail {

inline GameState fresh_state(PlanarGraph g, Drawing d, std::string source) {
  require_total(g, d);
  if (!d.is_injective()) throw ValidationError("starting drawing is not injective");
  GameState s;
  s.crossings = count_crossings(g, d);
  s.status = s.crossings == 0 ? GameStatus::solved : GameStatus::in_progress;
  s.graph = std::move(g);
  s.start = d;
  s.current = std::move(d);
  s.source = std::move(source);
  return s;
}

inline GameState from_instance(ClusteredInstance inst) {
  if (!inst.bad_drawing) throw ValidationError("instance has no bad drawing");
  auto s = fresh_state(inst.graph, *inst.bad_drawing, inst.family.tag());
  try {
    s.bound = certified_fixed_upper_bound(inst);
  } catch (const UnsupportedInstanceError&) {
    s.source = "custom";
  }
  s.instance = std::move(inst);
  return s;
}

}  // namespace detail

/// Scrambled random maximal planar graph: a plane triangulation whose
/// positions are then permuted among the vertices. Deterministic per seed.
inline DrawingSource scrambled_random(int n, std::uint64_t seed) {
  auto base = random_maximal_planar(n, seed);
  return {std::move(base.graph), shuffle_positions(base.drawing, seed + 1),
          "random(" + std::to_string(n) + "," + std::to_string(seed) + ")"};
}

inline GameState new_game(const GameSource& source) {
  return std::visit(
      [](const auto& src) -> GameState {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, GeneratedSource>) {
          return detail::from_instance(make_instance(src.family, src.layout));
        } else if constexpr (std::is_same_v<T, ScrambledSource>) {
          auto d = scrambled_random(src.n, src.seed);
          return detail::fresh_state(std::move(d.graph), std::move(d.drawing), d.label);
        } else if constexpr (std::is_same_v<T, DrawingSource>) {
          return detail::fresh_state(src.graph, src.drawing, src.label);
        } else {
          return detail::from_instance(src.instance);
        }
      },
      source);
}

/// Moves vertex v to p; only terms involving v are recounted.
inline GameState apply_move(GameState state, VertexId v, const Point& p) {
  if (v < 0 || v >= state.graph.vertex_count()) throw ValidationError("unknown vertex " + std::to_string(v));
  if (state.current.occupant(p)) throw MoveRejected("destination is occupied");
  const std::size_t before = crossings_involving(state.graph, state.current, v);
  state.current.set(v, p);
  const std::size_t after = crossings_involving(state.graph, state.current, v);
  state.crossings = state.crossings - before + after;
  state.history.push_back({v, p});
  state.status = state.crossings == 0 ? GameStatus::solved : GameStatus::in_progress;
  return state;
}

/// Rebuilds the session from its start drawing and a move list.
inline GameState replay(GameState state, const MoveSequence& moves) {
  state.current = apply_moves(state.start, moves);
  state.history = moves;
  state.crossings = count_crossings(state.graph, state.current);
  state.status = state.crossings == 0 ? GameStatus::solved : GameStatus::in_progress;
  return state;
}

inline GameState undo(GameState state) {
  if (state.history.empty()) throw MoveRejected("nothing to undo");
  auto moves = state.history;
  moves.pop_back();
  return replay(std::move(state), moves);
}

/// Moves of the face-fixing solver from the current drawing.
inline MoveSequence solver_plan(const GameState& state) {
  if (state.status == GameStatus::solved) return {};
  const auto solved = untangle_fixing_face(state.graph, state.current);
  return extract_moves(state.current, solved.drawing);
}

/// Next solver move, or nothing once the drawing is plane.
inline std::optional<Move> hint(const GameState& state) {
  const auto plan = solver_plan(state);
  if (plan.empty()) return std::nullopt;
  return plan.front();
}

struct ScoreReport {
  std::size_t moves_used = 0;
  std::optional<int> certified_moved_lower;
  bool solved = false;
  /// False only if a solved session used fewer moves than the certificate
  /// says are necessary, which would contradict the certificate.
  bool consistent_with_bound = true;
};

inline ScoreReport score(const GameState& state) {
  ScoreReport r;
  r.moves_used = state.history.size();
  r.solved = state.status == GameStatus::solved;
  if (state.bound) {
    r.certified_moved_lower = state.bound->certified_moved_lower;
    if (r.solved && r.moves_used < static_cast<std::size_t>(std::max(0, *r.certified_moved_lower)))
      r.consistent_with_bound = false;
  }
  return r;
}

}  // namespace untangle
