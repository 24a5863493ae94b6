#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "untangle/io.hpp"
#include "untangle/service.hpp"

namespace untangle {

namespace detail {

struct LoadedInput {
  std::optional<ClusteredInstance> instance;
  PlanarGraph graph;
  Drawing drawing;
};

// An instance file, or a plain graph/drawing file.
inline LoadedInput load_input(const std::string& path) {
  const auto j = read_json_file(path);
  LoadedInput in;
  if (j.contains("family")) {
    in.instance = instance_from_json(j);
    in.graph = in.instance->graph;
    in.drawing = *in.instance->bad_drawing;
  } else {
    auto gd = graph_drawing_from_json(j);
    in.graph = std::move(gd.graph);
    in.drawing = std::move(gd.drawing);
  }
  return in;
}

inline BoundMethod parse_method(const std::string& s) {
  if (s == "circle" || s == "circle_lemma") return BoundMethod::circle_lemma;
  if (s == "persistence") return BoundMethod::persistence;
  throw ValidationError("unknown method \"" + s + "\" (expected circle or persistence)");
}

}  // namespace detail

/// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact planarity-game toolkit: constructions, certificates, untangling, game service"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string family = "square", style = "stacked", layout = "parabola", out_path;
  int k = 3, s = 1;
  auto* construct = app.add_subcommand("construct", "Build a clustered instance with its bad drawing");
  construct->add_option("--family", family, "chain or square")->check(CLI::IsMember({"chain", "square"}));
  construct->add_option("--k", k, "Cluster size")->required()->check(CLI::Range(3, 200));
  construct->add_option("--s", s, "Extra clusters (chain only)")->check(CLI::Range(1, 200));
  construct->add_option("--style", style, "Cluster triangulation")->check(CLI::IsMember({"stacked", "strip"}));
  construct->add_option("--layout", layout, "Convex point set")->check(CLI::IsMember({"parabola", "circle"}));
  construct->add_option("--out", out_path, "Output file (stdout if omitted)");

  int kmax = 4, smax = 4;
  auto* lemma = app.add_subcommand("lemma-check", "Longest xyxy-free subsequence of every block sequence");
  lemma->add_option("--kmax", kmax)->required()->check(CLI::Range(1, 24));
  lemma->add_option("--smax", smax)->required()->check(CLI::Range(1, 24));

  std::string instance_path, method, redraw_path, log_path, preset;
  auto* bound = app.add_subcommand("bound", "Certificate for a standard instance");
  bound->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  bound->add_option("--method", method)->check(CLI::IsMember({"circle", "persistence"}));

  auto* verify = app.add_subcommand("verify", "Check a redrawing against the instance's certificate");
  verify->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--redraw", redraw_path)->required()->check(CLI::ExistingFile);

  bool fix_face = false;
  auto* untangle = app.add_subcommand("untangle", "Plane redrawing of an instance or graph file");
  untangle->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  untangle->add_flag("--fix-face", fix_face, "Keep one facial triangle in place");
  untangle->add_option("--out", out_path, "Output file (stdout if omitted)");

  int port = 8080;
  std::string static_dir, host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "HTTP game service");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--static", static_dir, "Directory served at /")->check(CLI::ExistingDirectory);

  auto* play_log = app.add_subcommand("play-log", "Replay a session log");
  auto* inst_opt = play_log->add_option("--instance", instance_path)->check(CLI::ExistingFile);
  play_log->add_option("--preset", preset)->excludes(inst_opt);
  play_log->add_option("--log", log_path)->required()->check(CLI::ExistingFile);

  std::vector<std::string> argv_store{"untangle"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& j, const std::string& path) {
    if (path.empty()) out << j.dump(2) << '\n';
    else write_json_file(path, j);
  };

  try {
    if (construct->parsed()) {
      if (family == "square" && construct->count("--s")) throw ValidationError("--s applies to chain only");
      Family f{parse_family_kind(family), k, family == "chain" ? s : 0, parse_style(style)};
      const auto inst = make_instance(f, layout == "circle" ? ConvexLayout::circle : ConvexLayout::parabola);
      emit(to_json(inst), out_path);
      if (!out_path.empty()) {
        if (json)
          out << Json{{"out", out_path}, {"family", f.tag()}, {"n", inst.vertex_count()},
                      {"edges", inst.graph.edge_count()}}.dump()
              << '\n';
        else
          out << "wrote " << f.tag() << " (n=" << inst.vertex_count() << ", m=" << inst.graph.edge_count() << ") to "
              << out_path << '\n';
      }
      return 0;
    }
    if (lemma->parsed()) {
      bool all = true;
      Json rows = Json::array();
      if (!json) out << std::setw(3) << "k" << std::setw(4) << "s" << std::setw(12) << "max_length" << std::setw(6)
                     << "k+s" << "  result\n";
      for (int kk = 1; kk <= kmax; ++kk)
        for (int ss = 1; ss <= smax; ++ss) {
          if (static_cast<std::size_t>(kk * ss) > kExhaustiveCap) continue;
          const auto c = check_circle_lemma({kk, ss});
          all = all && c.holds;
          if (json)
            rows.push_back({{"k", kk}, {"s", ss}, {"max_length", c.max_length}, {"bound", c.bound}, {"pass", c.holds}});
          else
            out << std::setw(3) << kk << std::setw(4) << ss << std::setw(12) << c.max_length << std::setw(6) << c.bound
                << "  " << (c.holds ? "pass" : "FAIL") << '\n';
        }
      if (json) out << Json{{"rows", rows}, {"pass", all}}.dump(2) << '\n';
      return all ? 0 : 1;
    }
    if (bound->parsed()) {
      const auto inst = instance_from_json(read_json_file(instance_path));
      std::optional<BoundMethod> m;
      if (!method.empty()) m = detail::parse_method(method);
      out << to_json(certified_fixed_upper_bound(inst, m)).dump(2) << '\n';
      return 0;
    }
    if (verify->parsed()) {
      const auto inst = instance_from_json(read_json_file(instance_path));
      const auto redraw = graph_drawing_from_json(read_json_file(redraw_path));
      if (!(redraw.graph == inst.graph)) throw ValidationError("redrawing is of a different graph");
      const auto cert = certified_fixed_upper_bound(inst);
      const auto verdict = verify_redraw(inst, cert, redraw.drawing);
      Json j = to_json(verdict);
      j["certified_fixed_upper"] = cert.certified_fixed_upper;
      out << j.dump(2) << '\n';
      return verdict.ok() ? 0 : 1;
    }
    if (untangle->parsed()) {
      const auto in = detail::load_input(instance_path);
      Drawing redraw;
      if (fix_face) {
        redraw = untangle_fixing_face(in.graph, in.drawing).drawing;
      } else {
        const auto faces = embedding_faces(in.graph);
        const auto outer = *std::max_element(faces.begin(), faces.end(),
                                             [](const auto& a, const auto& b) { return a.size() < b.size(); });
        redraw = barycentric_embed(in.graph, outer,
                                   convex_positions(static_cast<int>(outer.size()), ConvexLayout::circle).points());
      }
      const auto report = count_fixed(in.drawing, redraw);
      const auto crossings = count_crossings(in.graph, redraw);
      emit(to_json(in.graph, redraw), out_path);
      if (!out_path.empty()) {
        if (json)
          out << Json{{"out", out_path}, {"crossings", crossings}, {"fixed_count", report.fixed_count},
                      {"moved_count", report.moved_count}}.dump()
              << '\n';
        else
          out << "crossings " << crossings << ", fixed " << report.fixed_count << ", moved " << report.moved_count
              << ", wrote " << out_path << '\n';
      }
      return crossings == 0 ? 0 : 1;
    }
    if (serve_cmd->parsed()) {
      err << "listening on " << host << ':' << port << std::endl;
      if (!serve(port, static_dir.empty() ? std::nullopt : std::optional(static_dir), host)) {
        err << "error: cannot listen on " << host << ':' << port << '\n';
        return 2;
      }
      return 0;
    }
    if (play_log->parsed()) {
      GameState state;
      if (!preset.empty()) {
        state = new_game(source_from_json(Json{{"preset", preset}}));
      } else if (!instance_path.empty()) {
        auto in = detail::load_input(instance_path);
        state = in.instance ? new_game(InstanceSource{std::move(*in.instance)})
                            : new_game(DrawingSource{std::move(in.graph), std::move(in.drawing)});
      } else {
        throw ValidationError("play-log needs --instance or --preset");
      }
      std::ifstream log(log_path);
      state = replay_log(std::move(state), parse_log(log));
      if (json) {
        out << to_json(state).dump(2) << '\n';
      } else {
        const auto sc = score(state);
        out << "moves " << sc.moves_used << ", crossings " << state.crossings << ", " << to_string(state.status);
        if (sc.certified_moved_lower) out << ", certified lower bound " << *sc.certified_moved_lower;
        out << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace untangle
