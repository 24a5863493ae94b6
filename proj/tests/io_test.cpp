#include <gtest/gtest.h>

#include <sstream>

#include "untangle/io.hpp"

using namespace untangle;

TEST(Interchange, PointLayoutIsNumeratorDenominatorPairs) {
  const Point p(make_rational(-3, 4), make_rational(5));
  EXPECT_EQ(point_to_json(p), Json::parse("[-3, 4, 5, 1]"));
  EXPECT_EQ(point_from_json(Json::parse("[6, -8, 10, 2]")), p);
  EXPECT_THROW(point_from_json(Json::parse("[1, 0, 1, 1]")), ValidationError);
  EXPECT_THROW(point_from_json(Json::parse("[1, 1, 1]")), ValidationError);
}

TEST(Interchange, LargeIntegersTravelAsStrings) {
  const mpz_class big("1208925819614629174706176");  // 2^80
  const Point p(Rational(big, 3), Rational(1, big));
  const auto j = point_to_json(p);
  EXPECT_TRUE(j[0].is_string());
  EXPECT_TRUE(j[3].is_string());
  EXPECT_EQ(point_from_json(j), p);
  EXPECT_THROW(integer_from_json(Json("12x")), ValidationError);
}

TEST(Interchange, GraphDrawingRoundTrip) {
  const auto g = wheel_graph(6);
  const Drawing d({Point(0, 0), Point(make_rational(1, 3), 7), Point(-2, 5), Point(4, 4), Point(9, -1), Point(3, 3)});
  const auto j = to_json(g, d);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["edges"].size(), g.edge_count());
  EXPECT_EQ(j["drawing"]["1"], Json::parse("[1, 3, 7, 1]"));
  const auto back = graph_drawing_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.drawing, d);
}

TEST(Interchange, RejectsMalformedInput) {
  auto j = to_json(complete_graph(3), Drawing({Point(0, 0), Point(1, 0), Point(0, 1)}));
  auto missing = j;
  missing["drawing"].erase("2");
  EXPECT_THROW(graph_drawing_from_json(missing), ValidationError);
  auto badkey = j;
  badkey["drawing"]["x"] = Json::parse("[0, 1, 0, 1]");
  EXPECT_THROW(graph_drawing_from_json(badkey), ValidationError);
  auto loop = j;
  loop["edges"].push_back({1, 1});
  EXPECT_THROW(graph_drawing_from_json(loop), ValidationError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), ValidationError);
}

TEST(Interchange, InstanceRoundTripKeepsCertificate) {
  for (const Family& f : {Family{FamilyKind::chain, 3, 2}, Family{FamilyKind::square, 4, 0, TriangulationStyle::strip}}) {
    const auto inst = make_instance(f, ConvexLayout::circle);
    const auto j = to_json(inst);
    EXPECT_EQ(j["family"]["name"], f.name());
    const auto back = instance_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.family, f);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.clusters, inst.clusters);
    EXPECT_EQ(back.outer_triangles, inst.outer_triangles);
    EXPECT_EQ(*back.bad_drawing, *inst.bad_drawing);
    const auto a = certified_fixed_upper_bound(inst), b = certified_fixed_upper_bound(back);
    EXPECT_EQ(a.certified_fixed_upper, b.certified_fixed_upper);
    EXPECT_EQ(a.label_sequence, b.label_sequence);
  }
}

TEST(Interchange, InstanceClustersMustPartitionVertices) {
  auto j = to_json(make_instance({FamilyKind::square, 3}));
  j["clusters"][0][0] = j["clusters"][1][0];
  EXPECT_THROW(instance_from_json(j), ValidationError);
}

TEST(Decimals, RationalizedToMillionths) {
  EXPECT_EQ(rational_from_json(Json(0.5)), make_rational(1, 2));
  EXPECT_EQ(rational_from_json(Json(0.1234567)), make_rational(123457, 1000000));
  EXPECT_EQ(rational_from_json(Json(-2)), make_rational(-2));
  EXPECT_EQ(rational_from_json(Json::parse("[2, 6]")), make_rational(1, 3));
  EXPECT_THROW(rational_from_json(Json("abc")), ValidationError);
}

TEST(StateJson, CarriesExactAndDisplayCoordinates) {
  const auto s = new_game(GeneratedSource{{FamilyKind::square, 3}});
  const auto j = to_json(s);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["status"], "in_progress");
  EXPECT_EQ(j["crossings"], s.crossings);
  // Convex position: no vertex lies on an edge, so every crossing is an edge pair.
  EXPECT_EQ(j["crossing_pairs"].size(), s.crossings);
  EXPECT_EQ(j["bound"]["certified_fixed_upper"], 7);
  EXPECT_EQ(j["clusters"].size(), 3u);
  for (const auto& p : j["positions"]) {
    const auto x = rational_from_json(p["x"]);
    EXPECT_NEAR(x.get_d(), p["xd"].get<double>(), 1e-9);
  }
  EXPECT_TRUE(to_json(new_game(ScrambledSource{10, 2}))["bound"].is_null());
}

TEST(SessionLog, LinesMatchFormatAndReplay) {
  const auto s0 = new_game(GeneratedSource{{FamilyKind::chain, 3, 1}});
  const Move m1{0, Point(make_rational(1, 7), -3)}, m2{4, Point(11, 12)};
  const auto line = log_line(m1, 0);
  EXPECT_EQ(Json::parse(line), Json::parse(R"({"v": 0, "x": [1, 7], "y": [-3, 1], "t": 0})"));
  std::stringstream log;
  log << line << '\n' << log_line(m2, 1) << "\n\n" << undo_log_line(2) << '\n' << log_line(m2, 3) << '\n';
  const auto entries = parse_log(log);
  ASSERT_EQ(entries.size(), 4u);
  EXPECT_FALSE(entries[2].move.has_value());
  const auto s = replay_log(s0, entries);
  const auto expected = apply_move(apply_move(s0, 0, m1.to), 4, m2.to);
  EXPECT_EQ(s.current, expected.current);
  EXPECT_EQ(s.history, expected.history);
  EXPECT_EQ(s.crossings, expected.crossings);
  std::stringstream bad("{\"v\": 1}\n");
  EXPECT_THROW(parse_log(bad), ValidationError);
}
