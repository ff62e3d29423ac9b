#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "coreo/analysis.hpp"
#include "coreo/error.hpp"
#include "coreo/multigraph.hpp"
#include "coreo/notation.hpp"
#include "coreo/trails.hpp"
#include "support/oracles.hpp"

namespace coreo {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;
using testing::EdgeList;

VertexId V(const char* s) { return VertexId(s); }
EdgeId E(std::uint32_t x) { return EdgeId(x); }

Multigraph build(std::initializer_list<const char*> vertices,
                 std::initializer_list<std::tuple<int, const char*, const char*>> edges) {
  Multigraph g;
  for (const char* v : vertices) g.add_vertex(V(v));
  for (const auto& [id, a, b] : edges) g.add_edge(E(id), V(a), V(b));
  return g;
}

// A is the island: A-B twice, A-C twice, A-D, B-D, C-D.
Multigraph koenigsberg() {
  return build({"A", "B", "C", "D"}, {{1, "A", "B"}, {2, "A", "B"}, {3, "A", "C"},
                                      {4, "A", "C"}, {5, "A", "D"}, {6, "B", "D"},
                                      {7, "C", "D"}});
}

Multigraph eq1_map() {
  return build({"A", "B", "C", "D"}, {{1, "A", "D"}, {2, "A", "B"}, {3, "A", "B"},
                                      {4, "A", "B"}, {5, "B", "C"}, {6, "C", "D"}});
}

Multigraph gc1() {
  return build({"A", "B", "C", "D", "E"}, {{1, "A", "B"}, {2, "B", "C"}, {3, "C", "D"},
                                           {4, "D", "E"}, {5, "E", "A"}, {6, "B", "E"}});
}

Multigraph triangle() {
  return build({"A", "B", "C"}, {{1, "A", "B"}, {2, "B", "C"}, {3, "C", "A"}});
}

TEST(VertexIdTest, ShortlexOrder) {
  EXPECT_LT(V("A"), V("B"));
  EXPECT_LT(V("Z"), V("AA"));
  EXPECT_LT(V("AA"), V("AB"));
  EXPECT_THROW(V("a"), EngineError);
  EXPECT_THROW(V(""), EngineError);
  EXPECT_THROW(E(0), EngineError);
}

TEST(MultigraphTest, RejectsBadIds) {
  Multigraph g = build({"A", "B"}, {{1, "A", "B"}});
  EXPECT_THROW(g.add_vertex(V("A")), EngineError);
  EXPECT_THROW(g.add_edge(E(1), V("A"), V("B")), EngineError);
  EXPECT_THROW(g.add_edge(E(2), V("A"), V("Q")), EngineError);
  EXPECT_THROW(g.remove_edge(E(9)), EngineError);
  EXPECT_THROW(g.remove_vertex(V("A")), EngineError);
  EXPECT_EQ(g.next_edge_id(), E(2));
}

TEST(DegreeTest, KoenigsbergMatchesBruteForceCount) {
  const Multigraph g = koenigsberg();
  // Brute force: count endpoint occurrences straight off the edge list.
  std::map<VertexId, std::size_t> counted;
  for (const auto& [id, ends] : g.edges()) {
    ++counted[ends.first];
    ++counted[ends.second];
  }
  EXPECT_EQ(counted[V("A")], 5u);
  EXPECT_EQ(degree(g, V("A")), 5u);
  for (const char* v : {"B", "C", "D"}) {
    EXPECT_EQ(counted[V(v)], 3u);
    EXPECT_EQ(degree(g, V(v)), 3u);
  }
}

TEST(DegreeTest, IsolatedLoopAndUnknown) {
  const Multigraph g = build({"A", "B"}, {{1, "B", "B"}});
  EXPECT_EQ(degree(g, V("A")), 0u);
  EXPECT_EQ(degree(g, V("B")), 2u);
  try {
    degree(g, V("C"));
    FAIL();
  } catch (const EngineError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVertex);
  }
}

TEST(OddVerticesTest, Examples) {
  EXPECT_EQ(odd_vertices(koenigsberg()),
            (std::set<VertexId>{V("A"), V("B"), V("C"), V("D")}));
  EXPECT_THAT(odd_vertices(eq1_map()), IsEmpty());
  EXPECT_THAT(odd_vertices(Multigraph{}), IsEmpty());
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(is_edge_connected(koenigsberg()));
  EXPECT_FALSE(is_edge_connected(build(
      {"A", "B", "C", "D", "E", "F"},
      {{1, "A", "B"}, {2, "B", "C"}, {3, "C", "A"}, {4, "D", "E"}, {5, "E", "F"}, {6, "F", "D"}})));
  EXPECT_TRUE(is_edge_connected(build({"A", "B", "C"}, {{1, "A", "B"}})));
  EXPECT_TRUE(is_edge_connected(build({"A", "B"}, {})));
}

TEST(ClassifyTest, Koenigsberg) {
  const auto r = classify(koenigsberg());
  EXPECT_EQ(r.euler_type, (EulerType{TypeIII{NoTrailReason::OddCount, 4}}));
  EXPECT_THAT(r.feasible_starts, IsEmpty());
}

TEST(ClassifyTest, Gc1IsTypeTwoBetweenBAndE) {
  const auto r = classify(gc1());
  EXPECT_EQ(r.euler_type, (EulerType{TypeII{V("B"), V("E")}}));
  EXPECT_EQ(r.feasible_starts, (std::set<VertexId>{V("B"), V("E")}));
}

TEST(ClassifyTest, DegenerateAndDisconnected) {
  const auto single = classify(build({"A"}, {}));
  EXPECT_EQ(single.kind(), EulerKind::I);
  EXPECT_TRUE(single.degenerate);
  EXPECT_EQ(single.feasible_starts, std::set<VertexId>{V("A")});

  const auto two_loops = classify(build({"A", "B"}, {{1, "A", "A"}, {2, "B", "B"}}));
  EXPECT_EQ(two_loops.euler_type, (EulerType{TypeIII{NoTrailReason::Disconnected, 0}}));

  // Isolated vertices are inert: TypeI starts exclude them.
  const auto with_isolated = classify(build({"A", "B", "C"}, {{1, "A", "B"}, {2, "B", "A"}}));
  EXPECT_EQ(with_isolated.kind(), EulerKind::I);
  EXPECT_EQ(with_isolated.feasible_starts, (std::set<VertexId>{V("A"), V("B")}));
}

TEST(FeasibleStartsTest, Examples) {
  EXPECT_EQ(feasible_starts(eq1_map()),
            (std::set<VertexId>{V("A"), V("B"), V("C"), V("D")}));
  EXPECT_EQ(feasible_starts(gc1()), (std::set<VertexId>{V("B"), V("E")}));
  EXPECT_THAT(feasible_starts(koenigsberg()), IsEmpty());
}

TEST(FindTrailTest, FourShoresMapFromAIsAValidCircuit) {
  const Trail t = find_trail(eq1_map(), V("A"));
  EXPECT_EQ(t.edges.size(), 6u);
  EXPECT_EQ(t.start(), V("A"));
  EXPECT_EQ(t.end(), V("A"));
  const auto report = validate_trail(t, eq1_map());
  EXPECT_TRUE(report.eulerian());
  EXPECT_TRUE(report.is_circuit);
}

TEST(FindTrailTest, PathAndErrors) {
  const Multigraph path = build({"A", "B"}, {{1, "A", "B"}});
  EXPECT_EQ(find_trail(path, V("A")), (Trail{{V("A"), V("B")}, {E(1)}}));
  EXPECT_EQ(find_trail(path).start(), V("A"));

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const EngineError& e) {
      return e.code();
    }
    return ErrorCode::InvalidDocument;
  };
  EXPECT_EQ(code_of([] { find_trail(koenigsberg()); }), ErrorCode::NoTrail);
  EXPECT_EQ(code_of([] { find_trail(gc1(), V("A")); }), ErrorCode::InfeasibleStart);
  EXPECT_EQ(code_of([&] { find_trail(path, V("Z")); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([] { find_trail(Multigraph{}); }), ErrorCode::NoTrail);
}

TEST(FindTrailTest, DegenerateGraphGivesSingleVertexTrail) {
  const Multigraph g = build({"A", "B"}, {});
  EXPECT_EQ(find_trail(g), Trail::single(V("A")));
  EXPECT_EQ(find_trail(g, V("B")), Trail::single(V("B")));
}

TEST(FindTrailTest, LoopsAndParallelEdges) {
  const Multigraph g =
      build({"A", "B"}, {{1, "A", "A"}, {2, "A", "B"}, {3, "A", "B"}, {4, "B", "B"}});
  for (const char* s : {"A", "B"}) {
    const Trail t = find_trail(g, V(s));
    EXPECT_TRUE(validate_trail(t, g).eulerian()) << render_trail(t);
    EXPECT_TRUE(t.is_closed());
  }
}

TEST(EnumerateTrailsTest, FourShoresFromDContainsRotatedString) {
  EnumerateOptions opts;
  opts.start = V("D");
  const auto trails = enumerate_trails(eq1_map(), opts);
  std::vector<std::string> rendered;
  for (const auto& t : trails) rendered.push_back(render_trail(t));
  EXPECT_THAT(rendered, ::testing::Contains("D6C5B4A3B2A1D"));
  EXPECT_TRUE(std::is_sorted(trails.begin(), trails.end(),
                             [](const Trail& a, const Trail& b) { return a.edges < b.edges; }));
}

TEST(EnumerateTrailsTest, TriangleHasTwoTrailsFromA) {
  EnumerateOptions opts;
  opts.start = V("A");
  const auto trails = enumerate_trails(triangle(), opts);
  ASSERT_EQ(trails.size(), 2u);
  EXPECT_EQ(render_trail(trails[0]), "A1B2C3A");
  EXPECT_EQ(render_trail(trails[1]), "A3C2B1A");
}

TEST(EnumerateTrailsTest, KoenigsbergHasNone) {
  EXPECT_THAT(enumerate_trails(koenigsberg()), IsEmpty());
  for (const char* s : {"A", "B", "C", "D"}) {
    EnumerateOptions opts;
    opts.start = V(s);
    EXPECT_THAT(enumerate_trails(koenigsberg(), opts), IsEmpty());
  }
}

TEST(EnumerateTrailsTest, BudgetIsEnforced) {
  EnumerateOptions opts;
  opts.budget = 5;
  try {
    enumerate_trails(eq1_map(), opts);
    FAIL() << "expected BudgetExceeded";
  } catch (const EngineError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  opts.budget = 0;
  EXPECT_THROW(enumerate_trails(eq1_map(), opts), EngineError);
}

TEST(EnumerateTrailsTest, MaxResultsStopsEarly) {
  EnumerateOptions opts;
  opts.max_results = 3;
  EXPECT_EQ(enumerate_trails(eq1_map(), opts).size(), 3u);
}

TEST(ApplyEditTest, AddRemoveMove) {
  const Multigraph g = eq1_map();
  const Multigraph added = apply_edit(g, AddEdge{V("A"), V("C"), g.next_edge_id()});
  EXPECT_EQ(degree(added, V("A")), degree(g, V("A")) + 1);
  EXPECT_EQ(degree(added, V("C")), degree(g, V("C")) + 1);
  EXPECT_EQ(g, eq1_map());  // original untouched

  // Removing A-D leaves A and D odd (recomputed: A 4->3, D 2->1).
  const Multigraph removed = apply_edit(g, RemoveEdge{E(1)});
  EXPECT_EQ(odd_vertices(removed), (std::set<VertexId>{V("A"), V("D")}));

  const Multigraph looped = build({"A"}, {{1, "A", "A"}});
  EXPECT_EQ(apply_edit(looped, MoveEdge{E(1), V("A"), V("A")}), looped);

  const Multigraph moved = apply_edit(g, MoveEdge{E(1), V("B"), V("C")});
  EXPECT_EQ(moved.endpoints(E(1)), Endpoints(V("C"), V("B")));
  EXPECT_EQ(moved, apply_edit(apply_edit(g, RemoveEdge{E(1)}), AddEdge{V("B"), V("C"), E(1)}));
}

TEST(ApplyEditTest, Errors) {
  const Multigraph g = eq1_map();
  auto code_of = [&](const EdgeEdit& e) {
    try {
      apply_edit(g, e);
    } catch (const EngineError& err) {
      return err.code();
    }
    return ErrorCode::InvalidDocument;
  };
  EXPECT_EQ(code_of(AddEdge{V("A"), V("Z"), E(7)}), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of(AddEdge{V("A"), V("B"), E(1)}), ErrorCode::DuplicateEdgeId);
  EXPECT_EQ(code_of(RemoveEdge{E(42)}), ErrorCode::UnknownEdge);
  EXPECT_EQ(code_of(MoveEdge{E(42), V("A"), V("B")}), ErrorCode::UnknownEdge);
  EXPECT_EQ(code_of(MoveEdge{E(1), V("A"), V("Z")}), ErrorCode::UnknownVertex);
}

// Handshake identity and even odd-count on random multigraphs.
TEST(GraphProperties, Handshake) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Multigraph g = testing::random_graph(rng, 8, 20).to_graph();
    std::size_t sum = 0;
    for (const auto& [v, d] : degree_table(g)) sum += d;
    EXPECT_EQ(sum, 2 * g.edge_count());
    EXPECT_EQ(odd_vertices(g).size() % 2, 0u);
  }
}

TEST(GraphProperties, EditParity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Multigraph g = testing::random_graph(rng, 6, 10).to_graph();
    const auto ids = g.vertex_ids();
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    const VertexId u = ids[pick(rng)], v = ids[pick(rng)];
    const Multigraph h = apply_edit(g, AddEdge{u, v, g.next_edge_id()});

    std::set<VertexId> flipped;
    const auto before = degree_table(g), after = degree_table(h);
    for (const auto& [x, d] : before) {
      if (d % 2 != after.at(x) % 2) flipped.insert(x);
    }
    if (u == v) {
      EXPECT_THAT(flipped, IsEmpty());
    } else {
      EXPECT_EQ(flipped, (std::set<VertexId>{u, v}));
    }
    EXPECT_EQ(apply_edit(h, RemoveEdge{g.next_edge_id()}), g);
  }
}

// classify() against the parity-free enumerator on every multigraph with at
// most 3 vertices and 5 edges, disconnected ones included.
TEST(GraphProperties, ClassificationAgreesWithEnumerationSmall) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    testing::for_each_multigraph(n, 5, [&](const EdgeList& el) {
      const Multigraph g = el.to_graph();
      const auto report = classify(g);
      std::set<VertexId> starts;
      for (const auto& t : enumerate_trails(g)) starts.insert(t.start());
      EXPECT_EQ(report.kind() != EulerKind::III, !starts.empty());
      EXPECT_EQ(report.feasible_starts, starts);
      EXPECT_EQ(static_cast<int>(report.kind()), testing::brute_type(el));
      ++checked;
    });
  }
  // Multisets of size <= 5 over 1, 3 and 6 pair types: C(6,5)+C(8,5)+C(11,5).
  EXPECT_EQ(checked, 6u + 56u + 462u);
}

TEST(GraphProperties, FindTrailIsEulerianAndDeterministic) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Multigraph g = testing::random_walk_graph(rng, 7, 25).to_graph();
    const auto report = classify(g);
    ASSERT_NE(report.kind(), EulerKind::III);
    for (const auto& s : report.feasible_starts) {
      const Trail t = find_trail(g, s);
      EXPECT_EQ(t.start(), s);
      EXPECT_TRUE(validate_trail(t, g).eulerian()) << render_trail(t);
      if (report.kind() == EulerKind::I) EXPECT_TRUE(t.is_closed());
      EXPECT_EQ(t, find_trail(g, s));
    }
  }
}

TEST(GraphProperties, EnumerationIsDeterministic) {
  EXPECT_EQ(enumerate_trails(eq1_map()), enumerate_trails(eq1_map()));
  EXPECT_EQ(enumerate_trails(gc1()), enumerate_trails(gc1()));
}

}  // namespace
}  // namespace coreo
