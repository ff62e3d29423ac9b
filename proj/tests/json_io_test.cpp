#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "coreo/error.hpp"
#include "coreo/inverse.hpp"
#include "coreo/json_io.hpp"
#include "coreo/notation.hpp"
#include "coreo/trails.hpp"
#include "support/oracles.hpp"

namespace coreo {
namespace {

VertexId V(const char* s) { return VertexId(s); }
EdgeId E(std::uint32_t x) { return EdgeId(x); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const EngineError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no EngineError thrown";
  return ErrorCode::InvalidArgument;
}

TEST(JsonIoTest, GraphShape) {
  Multigraph g;
  g.add_vertex(V("A"), "Kneiphof");
  g.add_vertex(V("B"));
  g.add_edge(E(1), V("B"), V("A"));
  const Json j = to_json(g);
  EXPECT_EQ(j.dump(),
            R"({"edges":[{"ends":["A","B"],"id":1}],)"
            R"("vertices":[{"id":"A","label":"Kneiphof"},{"id":"B","label":"B"}]})");
}

TEST(JsonIoTest, ProposalShape) {
  Multigraph g;
  for (const char* v : {"A", "B"}) g.add_vertex(V(v));
  g.add_edge(E(1), V("A"), V("B"));
  const auto search = single_additions(g, EulerKind::I);
  ASSERT_EQ(search.proposals.size(), 1u);
  EXPECT_EQ(to_json(search).dump(),
            R"({"count":1,"proposals":[{"degenerate":false,"edit":{"add":["A","B"],"id":2,)"
            R"("kind":"add"},"resulting_feasible_starts":["A","B"],"resulting_type":"I"}],)"
            R"("rejected":[]})");
  EXPECT_EQ(describe(EdgeEdit{MoveEdge{E(1), V("C"), V("D")}}), "move 1 to C-D");
  EXPECT_EQ(describe(EdgeEdit{AddEdge{V("A"), V("B"), E(8)}}), "add A-B as 8");
  EXPECT_EQ(describe(EdgeEdit{RemoveEdge{E(3)}}), "remove 3");
}

TEST(JsonIoTest, ClassificationShape) {
  const auto three = to_json(classify(map_to_graph(builtin_map("koenigsberg"))));
  EXPECT_EQ(three.at("type"), "III");
  EXPECT_EQ(three.at("reason"), "OddCount");
  EXPECT_EQ(three.at("odd"), Json({"A", "B", "C", "D"}));
  EXPECT_EQ(three.at("degrees").at("A"), 5);
  EXPECT_FALSE(three.contains("endpoints"));

  const auto two = to_json(classify(builtin_schema("GC1").graph));
  EXPECT_EQ(two.at("endpoints"), Json({"B", "E"}));
}

TEST(JsonIoTest, TrailReportShape) {
  const auto r = validate_trail(parse_trail("A1D6C5B3A2B"), map_to_graph(builtin_map("fig2_bottom_left")));
  EXPECT_EQ(to_json(r).dump(),
            R"({"is_circuit":false,"status":"WellFormed",)"
            R"("violations":[{"edges":[4],"kind":"MissingEdges"}]})");
}

TEST(JsonIoTest, EditParsing) {
  const Multigraph g = map_to_graph(builtin_map("koenigsberg"));
  EXPECT_EQ(edit_from_json(Json::parse(R"({"kind":"add","add":["A","B"]})"), g),
            EdgeEdit(AddEdge{V("A"), V("B"), E(8)}));
  EXPECT_EQ(edit_from_json(Json::parse(R"({"kind":"move","remove":1,"add":["C","D"]})"), g),
            EdgeEdit(MoveEdge{E(1), V("C"), V("D")}));
  for (const char* bad : {R"({"kind":"swap"})", R"({"kind":"remove","remove":0})",
                          R"({"kind":"remove","remove":-3})", R"({"kind":"add","add":["a","B"]})",
                          R"({"kind":"add","add":["A"]})", R"([1,2])"}) {
    EXPECT_EQ(code_of([&] { edit_from_json(Json::parse(bad), g); }), ErrorCode::InvalidDocument)
        << bad;
  }
}

TEST(JsonIoTest, MalformedDocuments) {
  const char* cases[] = {
      R"([])",
      R"({"vertices":[{"id":"A"}]})",
      R"({"vertices":[{"id":"a"}],"edges":[]})",
      R"({"vertices":[{"id":"A"}],"edges":[{"id":1,"ends":["A","B"]}]})",
      R"({"vertices":[{"id":"A"}],"edges":[{"id":1,"ends":["A","A"]},{"id":1,"ends":["A","A"]}]})",
      R"({"vertices":[{"id":"A"},{"id":"A"}],"edges":[]})",
      R"({"vertices":[{"id":"A"}],"edges":[{"id":"x","ends":["A","A"]}]})",
      R"({"vertices":[{"id":"A"}],"edges":[],"positions":{}, "styles":{}})",
      R"({"vertices":[{"id":"A"}],"edges":[],"positions":{"A":[0]}, "styles":{}})",
      R"({"vertices":[{"id":"A"}],"edges":[],"positions":{"A":[0,0]}, "styles":{"01":"x"}})",
      R"({"regions":[{"id":"A"}],"bridges":[{"id":1,"ends":["A","Q"]}]})",
  };
  for (const char* text : cases) {
    EXPECT_EQ(code_of([&] { document_from_json(Json::parse(text)); }),
              ErrorCode::InvalidDocument)
        << text;
  }
  EXPECT_EQ(code_of([] { euler_kind_from_string("IV"); }), ErrorCode::InvalidArgument);
}

TEST(JsonIoTest, DocumentKindDetection) {
  EXPECT_TRUE(std::holds_alternative<MapInstance>(document_from_json(to_json(builtin_map("leiden")))));
  EXPECT_TRUE(std::holds_alternative<Schema>(document_from_json(to_json(builtin_schema("GC3")))));
  EXPECT_TRUE(std::holds_alternative<Multigraph>(
      document_from_json(Json::parse(R"({"vertices":[],"edges":[]})"))));
}

TEST(JsonIoProperties, RoundTrips) {
  for (const auto& name : builtin_map_names()) {
    const MapInstance m = builtin_map(name);
    EXPECT_EQ(map_from_json(Json::parse(to_json(m).dump())), m) << name;
  }
  for (const auto& name : builtin_schema_names()) {
    const Schema s = builtin_schema(name);
    EXPECT_EQ(schema_from_json(Json::parse(to_json(s).dump())), s) << name;
  }
  std::mt19937_64 rng(314);
  for (int i = 0; i < 200; ++i) {
    const Multigraph g = coreo::testing::random_graph(rng, 8, 12).to_graph();
    const std::string text = to_json(g).dump();
    const Multigraph back = graph_from_json(Json::parse(text));
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_json(back).dump(), text);
    const Schema s = schema_from_graph(g);
    check_schema(s);
    EXPECT_EQ(schema_from_json(to_json(s)), s);
  }
}

TEST(JsonIoProperties, ChoreographyRoundTrip) {
  const Schema s = builtin_schema("GC2");
  for (const auto& start : s.graph.vertex_ids()) {
    const Choreography c = choreograph(s, start, 3);
    EXPECT_EQ(choreography_from_json(Json::parse(to_json(c).dump())), c);
  }
  EXPECT_EQ(code_of([] { choreography_from_json(Json::parse(R"({"trail":"A1","styles":[],"beats":[]})")); }),
            ErrorCode::InvalidDocument);
}

}  // namespace
}  // namespace coreo
