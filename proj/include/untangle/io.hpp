#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "untangle/bounds.hpp"
#include "untangle/construction.hpp"
#include "untangle/game.hpp"

namespace untangle {

using Json = nlohmann::json;

// Integers that fit in int64 are written as JSON numbers, larger ones as
// decimal strings. Readers accept either.
inline Json integer_to_json(const mpz_class& z) {
  if (fits_int64(z)) return std::stoll(z.get_str());
  return z.get_str();
}

inline mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw ValidationError("not an integer: \"" + s + "\"");
    return z;
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

/// [numerator, denominator]
inline Json rational_to_json(const Rational& r) {
  return Json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

/// Accepts [n, d], a bare integer, or a decimal number (rationalized with
/// denominator 10^6).
inline Rational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ValidationError("rational must be [numerator, denominator]");
    return make_rational(integer_from_json(j[0]), integer_from_json(j[1]));
  }
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_string()) return Rational(integer_from_json(j));
  if (j.is_number_float()) return rationalize_decimal(j.get<double>());
  throw ValidationError("expected a rational, got " + j.dump());
}

/// [xn, xd, yn, yd]
inline Json point_to_json(const Point& p) {
  return Json::array({integer_to_json(p.x().get_num()), integer_to_json(p.x().get_den()),
                      integer_to_json(p.y().get_num()), integer_to_json(p.y().get_den())});
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ValidationError("point must be [xn, xd, yn, yd], got " + j.dump());
  return {make_rational(integer_from_json(j[0]), integer_from_json(j[1])),
          make_rational(integer_from_json(j[2]), integer_from_json(j[3]))};
}

inline Json edges_to_json(const PlanarGraph& g) {
  Json out = Json::array();
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

inline Json drawing_to_json(const Drawing& d) {
  Json out = Json::object();
  for (std::size_t v = 0; v < d.size(); ++v) out[std::to_string(v)] = point_to_json(d[static_cast<VertexId>(v)]);
  return out;
}

/// {"n", "edges", "drawing"}
inline Json to_json(const PlanarGraph& g, const Drawing& d) {
  require_total(g, d);
  return {{"n", g.vertex_count()}, {"edges", edges_to_json(g)}, {"drawing", drawing_to_json(d)}};
}

inline PlanarGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw ValidationError("missing \"n\" or \"edges\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0) throw ValidationError("\"n\" must be a non-negative integer");
  const int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ValidationError("edge must be [u, v], got " + e.dump());
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return PlanarGraph(n, std::move(edges));
}

inline Drawing drawing_from_json(const Json& j, int n) {
  if (!j.is_object()) throw ValidationError("\"drawing\" must be an object keyed by vertex id");
  std::vector<std::optional<Point>> pos(static_cast<std::size_t>(n));
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
    }
    if (used != key.size() || v < 0 || v >= n) throw ValidationError("drawing key \"" + key + "\" is not a vertex id");
    pos[v] = point_from_json(value);
  }
  std::vector<Point> out;
  for (int v = 0; v < n; ++v) {
    if (!pos[v]) throw ValidationError("drawing has no position for vertex " + std::to_string(v));
    out.push_back(*pos[v]);
  }
  return Drawing(std::move(out));
}

struct GraphDrawing {
  PlanarGraph graph;
  Drawing drawing;
};

inline GraphDrawing graph_drawing_from_json(const Json& j) {
  auto g = graph_from_json(j);
  if (!j.contains("drawing")) throw ValidationError("missing \"drawing\"");
  auto d = drawing_from_json(j["drawing"], g.vertex_count());
  return {std::move(g), std::move(d)};
}

inline Json family_to_json(const Family& f) {
  Json j = {{"name", f.name()}, {"k", f.k}, {"style", to_string(f.style)}, {"tag", f.tag()}};
  if (f.kind == FamilyKind::chain) j["s"] = f.s;
  return j;
}

inline FamilyKind parse_family_kind(const std::string& s) {
  if (s == "chain") return FamilyKind::chain;
  if (s == "square") return FamilyKind::square;
  throw ValidationError("unknown family \"" + s + "\" (expected chain or square)");
}

inline Family family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("k")) throw ValidationError("family needs \"name\" and \"k\"");
  Family f;
  f.kind = parse_family_kind(j["name"].get<std::string>());
  f.k = j["k"].get<int>();
  f.s = f.kind == FamilyKind::chain ? j.value("s", 1) : 0;
  f.style = parse_style(j.value("style", std::string("stacked")));
  if (f.k < 3) throw ValidationError("family k must be >= 3");
  if (f.kind == FamilyKind::chain && f.s < 1) throw ValidationError("family s must be >= 1");
  return f;
}

/// Interchange format extended with "clusters" and "family".
inline Json to_json(const ClusteredInstance& inst) {
  if (!inst.bad_drawing) throw ValidationError("instance has no bad drawing");
  Json j = to_json(inst.graph, *inst.bad_drawing);
  j["clusters"] = inst.clusters;
  j["family"] = family_to_json(inst.family);
  return j;
}

/// Reads an instance file. Cluster outer triangles come from the family's
/// builder when the clusters match it, else the first three members.
inline ClusteredInstance instance_from_json(const Json& j) {
  if (!j.contains("family") || !j.contains("clusters")) throw ValidationError("instance needs \"family\" and \"clusters\"");
  auto gd = graph_drawing_from_json(j);
  ClusteredInstance inst;
  inst.family = family_from_json(j["family"]);
  inst.graph = std::move(gd.graph);
  inst.clusters = j["clusters"].get<std::vector<std::vector<VertexId>>>();
  std::vector<int> seen(static_cast<std::size_t>(inst.graph.vertex_count()), 0);
  for (const auto& c : inst.clusters) {
    if (c.size() < 3) throw ValidationError("every cluster needs at least 3 vertices");
    for (VertexId v : c) {
      if (v < 0 || v >= inst.graph.vertex_count()) throw ValidationError("cluster member " + std::to_string(v) + " out of range");
      if (seen[v]++) throw ValidationError("vertex " + std::to_string(v) + " is in two clusters");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) > 0) throw ValidationError("clusters do not cover every vertex");
  std::optional<ClusteredInstance> reference;
  try {
    reference = build_family(inst.family);
  } catch (const Error&) {
  }
  if (reference && reference->clusters == inst.clusters) {
    inst.outer_triangles = reference->outer_triangles;
  } else {
    for (const auto& c : inst.clusters) inst.outer_triangles.push_back({c[0], c[1], c[2]});
  }
  inst.bad_drawing = std::move(gd.drawing);
  return inst;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << '\n';
}

inline Json to_json(const BoundCertificate& c) {
  return {{"family", family_to_json(c.family)},
          {"vertex_count", c.vertex_count},
          {"label_sequence", c.label_sequence.labels()},
          {"method", to_string(c.method)},
          {"certified_fixed_upper", c.certified_fixed_upper},
          {"certified_moved_lower", c.certified_moved_lower}};
}

inline Json to_json(const FixReport& r) {
  return {{"fixed_count", r.fixed_count}, {"moved_count", r.moved_count}, {"fixed_vertices", r.fixed_vertices}};
}

inline Json to_json(const RedrawVerdict& v) {
  Json j = to_json(v.report);
  j["plane"] = v.plane;
  j["within_fixed_bound"] = v.within_fixed_bound;
  if (v.persistent_count) j["persistent_count"] = *v.persistent_count;
  j["persistence_ok"] = v.persistence_ok;
  j["pass"] = v.ok();
  return j;
}

inline Json to_json(const Move& m) {
  return {{"v", m.v}, {"x", rational_to_json(m.to.x())}, {"y", rational_to_json(m.to.y())}};
}

inline Json to_json(const ScoreReport& r) {
  Json j = {{"moves_used", r.moves_used}, {"solved", r.solved}, {"consistent_with_bound", r.consistent_with_bound}};
  j["certified_moved_lower"] = r.certified_moved_lower ? Json(*r.certified_moved_lower) : Json(nullptr);
  return j;
}

inline Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

/// Full session state. Coordinates are exact [n, d] pairs; "xd"/"yd" are
/// display-only decimals.
inline Json to_json(const GameState& s) {
  Json positions = Json::array();
  for (std::size_t v = 0; v < s.current.size(); ++v) {
    const auto& p = s.current[static_cast<VertexId>(v)];
    positions.push_back({{"v", v},
                         {"x", rational_to_json(p.x())},
                         {"y", rational_to_json(p.y())},
                         {"xd", p.approx_x()},
                         {"yd", p.approx_y()}});
  }
  Json pairs = Json::array();
  for (const auto& [e, f] : crossing_pairs(s.graph, s.current)) pairs.push_back({edge_json(e), edge_json(f)});
  Json history = Json::array();
  for (const auto& m : s.history) history.push_back(to_json(m));
  Json j = {{"n", s.graph.vertex_count()},
            {"edges", edges_to_json(s.graph)},
            {"positions", positions},
            {"crossings", s.crossings},
            {"crossing_pairs", pairs},
            {"history", history},
            {"status", to_string(s.status)},
            {"source", s.source},
            {"score", to_json(score(s))}};
  j["bound"] = s.bound ? to_json(*s.bound) : Json(nullptr);
  j["clusters"] = s.instance ? Json(s.instance->clusters) : Json(nullptr);
  return j;
}

/// One line of a session log: a move, or an undo of the previous move.
struct LogEntry {
  std::optional<Move> move;  // empty for undo
  long t = 0;
};

inline std::string log_line(const Move& m, long t) {
  Json j = to_json(m);
  j["t"] = t;
  return j.dump();
}

inline std::string undo_log_line(long t) { return Json{{"undo", true}, {"t", t}}.dump(); }

inline std::vector<LogEntry> parse_log(std::istream& in) {
  std::vector<LogEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = Json::parse(line);
      LogEntry e;
      e.t = j.value("t", 0L);
      if (j.value("undo", false)) {
        out.push_back(e);
        continue;
      }
      e.move = Move{j.at("v").get<VertexId>(), Point(rational_from_json(j.at("x")), rational_from_json(j.at("y")))};
      out.push_back(std::move(e));
    } catch (const Json::exception& ex) {
      throw ValidationError("log line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return out;
}

/// Applies logged moves and undos in order, as the live session did.
inline GameState replay_log(GameState state, const std::vector<LogEntry>& entries) {
  for (const auto& e : entries) state = e.move ? apply_move(std::move(state), e.move->v, e.move->to) : undo(std::move(state));
  return state;
}

}  // namespace untangle
