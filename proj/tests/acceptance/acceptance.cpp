// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coreo/analysis.hpp"
#include "coreo/choreography.hpp"
#include "coreo/inverse.hpp"
#include "coreo/maps.hpp"
#include "coreo/notation.hpp"
#include "coreo/trails.hpp"
#include "support/oracles.hpp"

using namespace coreo;
namespace oracle = coreo::testing;

namespace {

// Every trail seen by the other checks, for the round-trip check.
std::vector<Trail> g_seen;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

int g_failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    out.require(false, "too slow");
  }
  std::printf("%s  [%d] %-28s %8.3f s", out.ok ? "PASS" : "FAIL", n, name, secs);
  if (limit_s > 0) std::printf(" (limit %g s)", limit_s);
  const std::string d = out.detail.str();
  if (!d.empty()) std::printf("  %s", d.c_str());
  std::printf("\n");
  if (!out.ok) ++g_failures;
}

std::set<VertexId> starts_of(const std::vector<Trail>& trails) {
  std::set<VertexId> s;
  for (const auto& t : trails) s.insert(t.start());
  return s;
}

// Re-types a graph with the test-side brute force, independent of classify().
int brute_type_of(const Multigraph& g) {
  oracle::EdgeList el;
  std::map<VertexId, std::size_t> index;
  for (const auto& v : g.vertex_ids()) index.emplace(v, el.n++);
  for (const auto& [id, ends] : g.edges()) {
    el.edges.emplace_back(index.at(ends.first), index.at(ends.second));
  }
  return oracle::brute_type(el);
}

int brute_code(EulerKind k) { return k == EulerKind::I ? 0 : k == EulerKind::II ? 1 : 2; }

void koenigsberg_nonexistence(Outcome& out) {
  const Multigraph g = map_to_graph(builtin_map("koenigsberg"));
  out.require(classify(g).kind() == EulerKind::III, "not Type III; ");
  for (const auto& v : g.vertex_ids()) {
    EnumerateOptions opts;
    opts.start = v;
    const auto found = enumerate_trails(g, opts);
    out.require(found.empty(), "trail found from " + v.str() + "; ");
  }
}

void map_circuit_rotation(Outcome& out) {
  const Multigraph g = map_to_graph(builtin_map("fig2_bottom_left"));
  const Trail t = parse_trail("A1D6C5B4A3B2A");
  const TrailReport r = validate_trail(t, g);
  out.require(r.status == TrailStatus::Eulerian && r.is_circuit, "not an Eulerian circuit; ");
  const Trail rotated = rotate_circuit(t, 1);
  const std::string s = render_trail(rotated);
  out.require(s == "D6C5B4A3B2A1D", "rotation rendered " + s + "; ");
  out.require(validate_trail(rotated, g).eulerian(), "rotation not Eulerian; ");
  g_seen.push_back(t);
  g_seen.push_back(rotated);
}

void gc1_endpoints(Outcome& out) {
  const Multigraph g = builtin_schema("GC1").graph;
  const std::set<VertexId> be = {VertexId("B"), VertexId("E")};
  out.require(feasible_starts(g) == be, "feasible starts differ; ");
  const Trail t = parse_trail("B6E5A1B2C3D4E");
  out.require(validate_trail(t, g).status == TrailStatus::Eulerian, "B6E5A1B2C3D4E not Eulerian; ");
  const auto all = enumerate_trails(g);
  out.require(!all.empty(), "no trails; ");
  for (const auto& tr : all) {
    out.require(be.contains(tr.start()) && be.contains(tr.end()),
                render_trail(tr) + " leaves {B,E}; ");
  }
  g_seen.push_back(t);
  g_seen.insert(g_seen.end(), all.begin(), all.end());
}

void oracle_equivalence(Outcome& out) {
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    oracle::for_each_multigraph(n, 6, [&](const oracle::EdgeList& el) {
      if (!oracle::fully_connected(el)) return;
      ++graphs;
      const Multigraph g = el.to_graph();
      const auto report = classify(g);
      const auto trails = enumerate_trails(g);
      const bool exists = report.kind() != EulerKind::III;
      if (exists != !trails.empty() || report.feasible_starts != starts_of(trails)) {
        out.require(false, "disagreement on " + std::to_string(n) + " vertices; ");
      }
      out.require(brute_code(report.kind()) == oracle::brute_type(el), "brute type differs; ");
      for (const auto& t : trails) out.require(validate_trail(t, g).eulerian(), "bad trail; ");
      g_seen.insert(g_seen.end(), trails.begin(), trails.end());
    });
  }
  out.detail << graphs << " graphs";
}

void koenigsberg_inverse(Outcome& out) {
  const Multigraph g = map_to_graph(builtin_map("koenigsberg"));
  const auto add2 = single_additions(g, EulerKind::II);
  const auto add1 = single_additions(g, EulerKind::I);
  const auto rem2 = single_removals(g, EulerKind::II);
  const auto mov1 = bridge_moves(g, EulerKind::I);
  const auto mov2 = bridge_moves(g, EulerKind::II);
  out.require(add2.proposals.size() == 6, "add->II count; ");
  out.require(add1.proposals.empty(), "add->I count; ");
  out.require(rem2.proposals.size() == 7, "remove->II count; ");
  out.require(!mov1.proposals.empty(), "move->I empty; ");
  out.require(!mov2.proposals.empty(), "move->II empty; ");
  for (const auto& [search, target] : {std::pair{&add2, EulerKind::II}, {&rem2, EulerKind::II},
                                       {&mov1, EulerKind::I}, {&mov2, EulerKind::II}}) {
    for (const auto& p : search->proposals) {
      out.require(brute_type_of(apply_edit(g, p.edit)) == brute_code(target),
                  "proposal fails brute-force check; ");
    }
  }
  out.detail << "moves: " << mov1.proposals.size() << " to I, " << mov2.proposals.size()
             << " to II";
}

void entry_exit(Outcome& out) {
  std::mt19937_64 rng(1736);
  for (int i = 0; i < 1000; ++i) {
    const oracle::EdgeList el = oracle::random_walk_graph(rng, 12, 50);
    const Multigraph g = el.to_graph();
    const Trail t = find_trail(g);
    const TrailAudit audit = entry_exit_audit(t);
    const auto degrees = oracle::brute_degrees(el);
    for (std::size_t v = 0; v < el.n; ++v) {
      const VertexId id = oracle::vid(v);
      const auto it = audit.traffic.find(id);
      const VertexTraffic traffic = it == audit.traffic.end() ? VertexTraffic{} : it->second;
      long expected = 0;
      if (!t.is_closed()) {
        if (id == t.start()) expected += 1;
        if (id == t.end()) expected -= 1;
      }
      if (traffic.balance() != expected || traffic.entries + traffic.exits != degrees[v]) {
        out.require(false, "graph " + std::to_string(i) + " vertex " + id.str() + "; ");
      }
    }
    out.require(t.edges.size() == el.edges.size(), "trail misses edges; ");
    g_seen.push_back(t);
  }
}

void round_trip(Outcome& out) {
  std::size_t failures = 0;
  for (const auto& t : g_seen) {
    if (parse_trail(render_trail(t)) != t) ++failures;
  }
  out.require(failures == 0, std::to_string(failures) + " failures; ");
  out.detail << g_seen.size() << " trails";
}

void table_fixtures(Outcome& out) {
  // existence, start dependence ("-" when nothing exists)
  const std::vector<std::tuple<const char*, bool, const char*>> table = {
      {"G1", false, "-"}, {"G2", true, "yes"}, {"G3", true, "yes"},
      {"G4", true, "no"}, {"G5", false, "-"},  {"G6", false, "-"}};
  for (const auto& [name, exists, depends] : table) {
    const Multigraph g = builtin_schema(name).graph;
    const auto kind = classify(g).kind();
    const bool got_exists = kind != EulerKind::III;
    const std::string got_depends = !got_exists ? "-" : kind == EulerKind::II ? "yes" : "no";
    out.require(got_exists == exists && got_depends == depends, std::string(name) + "; ");
    const auto trails = enumerate_trails(g);
    out.require(trails.empty() != exists, std::string(name) + " enumeration; ");
    g_seen.insert(g_seen.end(), trails.begin(), trails.end());
  }
}

}  // namespace

int main() {
  criterion(1, "koenigsberg-nonexistence", 1.0, koenigsberg_nonexistence);
  criterion(2, "map-circuit-rotation", 0, map_circuit_rotation);
  criterion(3, "gc1-endpoints", 0, gc1_endpoints);
  criterion(4, "oracle-equivalence", 60.0, oracle_equivalence);
  criterion(5, "koenigsberg-inverse-counts", 5.0, koenigsberg_inverse);
  criterion(6, "entry-exit-audit", 10.0, entry_exit);
  criterion(8, "fixture-table", 0, table_fixtures);
  // Runs last so it covers the trails of every check above.
  criterion(7, "notation-round-trip", 0, round_trip);
  std::printf("%d failed\n", g_failures);
  return g_failures;
}
