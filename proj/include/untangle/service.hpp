#pragma once

#include <httplib.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <string>

#include "untangle/io.hpp"

namespace untangle {

/// One game plus its move log. `mu` serializes mutations of this session.
struct Session {
  std::mutex mu;
  GameState state;
  std::string log;  // JSON lines
  long seq = 0;
  std::optional<std::filesystem::path> log_path;
  std::chrono::steady_clock::time_point created;
  std::chrono::steady_clock::time_point last_active;

  void append_log(const std::string& line) {
    log += line;
    log += '\n';
    if (log_path) std::ofstream(*log_path, std::ios::app) << line << '\n';
  }
};

inline std::chrono::seconds session_ttl_from_env() {
  if (const char* s = std::getenv("UNTANGLE_SESSION_TTL")) {
    try {
      const long v = std::stol(s);
      if (v > 0) return std::chrono::seconds(v);
    } catch (const std::exception&) {
    }
  }
  return std::chrono::seconds(3600);
}

/// In-memory sessions keyed by random hex ids; idle sessions are evicted
/// lazily on access.
class SessionRegistry {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionRegistry(std::chrono::seconds ttl = session_ttl_from_env(),
                           std::optional<std::filesystem::path> log_dir = {})
      : ttl_(ttl), log_dir_(std::move(log_dir)), rng_(std::random_device{}()) {}

  std::pair<std::string, std::shared_ptr<Session>> create(GameState state) {
    auto s = std::make_shared<Session>();
    s->state = std::move(state);
    return {adopt(s), s};
  }

  /// Registers a prepared session (state and log already filled in).
  std::string adopt(const std::shared_ptr<Session>& s) {
    std::lock_guard lock(mu_);
    evict_locked(Clock::now());
    std::string id;
    do id = random_id_locked();
    while (sessions_.count(id));
    s->created = s->last_active = Clock::now();
    if (log_dir_) {
      s->log_path = *log_dir_ / (id + ".jsonl");
      std::ofstream(*s->log_path) << s->log;
    }
    sessions_[id] = s;
    return id;
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::lock_guard lock(mu_);
    const auto now = Clock::now();
    evict_locked(now);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    it->second->last_active = now;
    return it->second;
  }

  std::size_t size() {
    std::lock_guard lock(mu_);
    return sessions_.size();
  }

  void evict_expired(Clock::time_point now = Clock::now()) {
    std::lock_guard lock(mu_);
    evict_locked(now);
  }

 private:
  void evict_locked(Clock::time_point now) {
    for (auto it = sessions_.begin(); it != sessions_.end();)
      it = now - it->second->last_active > ttl_ ? sessions_.erase(it) : std::next(it);
  }

  std::string random_id_locked() {
    static const char* hex = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 16; ++i) id += hex[rng_() % 16];
    return id;
  }

  std::chrono::seconds ttl_;
  std::optional<std::filesystem::path> log_dir_;
  std::mutex mu_;
  std::mt19937_64 rng_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

struct Preset {
  std::string id;
  std::string description;
  GameSource source;
};

inline std::vector<Preset> presets() {
  std::vector<Preset> out;
  for (int k : {3, 4, 5})
    out.push_back({"square(" + std::to_string(k) + ")", "k clusters of size k, certified by the circle bound",
                   GeneratedSource{{FamilyKind::square, k}}});
  for (auto [k, s] : {std::pair{3, 1}, {3, 2}, {4, 2}})
    out.push_back({"chain(" + std::to_string(k) + "," + std::to_string(s) + ")",
                   "s+k clusters of size k, certified by persistence", GeneratedSource{{FamilyKind::chain, k, s}}});
  for (auto [n, seed] : {std::pair{12, 7}, {30, 1}})
    out.push_back({"random(" + std::to_string(n) + "," + std::to_string(seed) + ")",
                   "scrambled random triangulation, no certificate",
                   ScrambledSource{n, static_cast<std::uint64_t>(seed)}});
  return out;
}

/// Game source from a request body: {"preset": id}, {"family": {...},
/// "layout": ...}, {"random": {"n", "seed"}}, {"instance": {...}} or a plain
/// {"n", "edges", "drawing"} graph.
inline GameSource source_from_json(const Json& body) {
  if (!body.is_object()) throw ValidationError("body must be a JSON object");
  if (body.contains("preset")) {
    const auto id = body["preset"].get<std::string>();
    for (auto& p : presets())
      if (p.id == id) return p.source;
    throw ValidationError("unknown preset \"" + id + "\"");
  }
  if (body.contains("family")) {
    const auto layout = body.value("layout", std::string("circle"));
    if (layout != "circle" && layout != "parabola") throw ValidationError("layout must be circle or parabola");
    return GeneratedSource{family_from_json(body["family"]),
                           layout == "circle" ? ConvexLayout::circle : ConvexLayout::parabola};
  }
  if (body.contains("random")) {
    const auto& r = body["random"];
    const int n = r.at("n").get<int>();
    if (n < 3 || n > 500) throw ValidationError("random n must be in [3, 500]");
    return ScrambledSource{n, r.value("seed", std::uint64_t{1})};
  }
  if (body.contains("instance")) return InstanceSource{instance_from_json(body["instance"])};
  if (body.contains("n")) {
    auto gd = graph_drawing_from_json(body);
    return DrawingSource{std::move(gd.graph), std::move(gd.drawing)};
  }
  throw ValidationError("body must name a preset, family, random, instance or graph");
}

/// HTTP front end over the game engine. Every response body is JSON.
class Service {
 public:
  explicit Service(std::shared_ptr<SessionRegistry> registry = std::make_shared<SessionRegistry>())
      : registry_(std::move(registry)) {}

  SessionRegistry& registry() { return *registry_; }

  void install(httplib::Server& server) {
    server.Get("/api/instances/presets", [](const httplib::Request&, httplib::Response& res) {
      Json out = Json::array();
      for (const auto& p : presets()) {
        const auto state = new_game(p.source);
        out.push_back({{"id", p.id}, {"description", p.description}, {"n", state.graph.vertex_count()},
                       {"certified", state.bound.has_value()}});
      }
      send(res, 200, out);
    });
    server.Post("/api/games", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = parse_body(req);
        auto session = std::make_shared<Session>();
        session->state = new_game(source_from_json(body));
        if (body.contains("log")) {
          std::istringstream in(body["log"].get<std::string>());
          for (const auto& e : parse_log(in)) record(*session, e.move);
        }
        const auto id = registry_->adopt(session);
        std::lock_guard lock(session->mu);
        send(res, 201, {{"id", id}, {"state", to_json(session->state)}});
      });
    });
    server.Get(R"(/api/games/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Session& s) { send(res, 200, to_json(s.state)); });
    });
    server.Post(R"(/api/games/([0-9a-f]+)/moves)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Session& s) {
        const auto body = parse_body(req);
        if (!body.is_object() || !body.contains("v") || !body.contains("x") || !body.contains("y"))
          throw ValidationError("move needs \"v\", \"x\" and \"y\"");
        if (!body["v"].is_number_integer()) throw ValidationError("\"v\" must be an integer");
        record(s, Move{body["v"].get<VertexId>(), Point(rational_from_json(body["x"]), rational_from_json(body["y"]))});
        send(res, 200, to_json(s.state));
      });
    });
    server.Post(R"(/api/games/([0-9a-f]+)/undo)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Session& s) {
        record(s, std::nullopt);
        send(res, 200, to_json(s.state));
      });
    });
    server.Get(R"(/api/games/([0-9a-f]+)/hint)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Session& s) {
        const auto plan = solver_plan(s.state);
        if (plan.empty()) {
          res.status = 204;
          return;
        }
        Json j = to_json(plan.front());
        j["xd"] = plan.front().to.approx_x();
        j["yd"] = plan.front().to.approx_y();
        j["remaining"] = plan.size();
        send(res, 200, j);
      });
    });
    server.Get(R"(/api/games/([0-9a-f]+)/log)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Session& s) { res.set_content(s.log, "application/x-ndjson"); });
    });
  }

 private:
  static void send(httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  static Json parse_body(const httplib::Request& req) {
    try {
      return Json::parse(req.body);
    } catch (const Json::parse_error& e) {
      throw ValidationError(std::string("malformed JSON body: ") + e.what());
    }
  }

  template <class F>
  static void guarded(httplib::Response& res, F&& f) {
    try {
      f();
    } catch (const MoveRejected& e) {
      send(res, 409, {{"error", e.what()}});
    } catch (const Json::exception& e) {
      send(res, 400, {{"error", e.what()}});
    } catch (const InternalError& e) {
      send(res, 500, {{"error", e.what()}});
    } catch (const Error& e) {
      send(res, 400, {{"error", e.what()}});
    }
  }

  template <class F>
  void with_session(const httplib::Request& req, httplib::Response& res, F&& f) {
    auto session = registry_->find(req.matches[1]);
    if (!session) {
      send(res, 404, {{"error", "unknown session " + std::string(req.matches[1])}});
      return;
    }
    std::lock_guard lock(session->mu);
    guarded(res, [&] { f(*session); });
  }

  // Applies a move (or an undo when empty) and logs it. Works on a copy so a
  // rejected move leaves the session untouched.
  static void record(Session& s, const std::optional<Move>& move) {
    if (move) {
      s.state = apply_move(s.state, move->v, move->to);
      s.append_log(log_line(*move, s.seq++));
    } else {
      s.state = undo(s.state);
      s.append_log(undo_log_line(s.seq++));
    }
  }

  std::shared_ptr<SessionRegistry> registry_;
};

/// Runs the service until the process is stopped. Returns false if the port
/// could not be bound.
inline bool serve(int port, const std::optional<std::string>& static_dir = {}, const std::string& host = "127.0.0.1") {
  httplib::Server server;
  Service service;
  service.install(server);
  if (static_dir && !server.set_mount_point("/", *static_dir))
    throw ValidationError("static directory " + *static_dir + " does not exist");
  return server.listen(host, port);
}

}  // namespace untangle
