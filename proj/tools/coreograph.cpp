// coreograph: command-line front end for the Eulerian trail engine.
//
// Exit codes: 0 success, 1 a domain "no" (no trail, empty proposal list,
// invalid trail, search budget exhausted), 2 usage or input errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coreo/analysis.hpp"
#include "coreo/api.hpp"
#include "coreo/choreography.hpp"
#include "coreo/error.hpp"
#include "coreo/inverse.hpp"
#include "coreo/json_io.hpp"
#include "coreo/maps.hpp"
#include "coreo/notation.hpp"
#include "coreo/trails.hpp"

namespace {

using namespace coreo;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InputDocument load_input(const std::string& spec) {
  constexpr std::string_view kAtlas = "atlas:";
  if (spec.rfind(kAtlas, 0) == 0) {
    const std::string name = spec.substr(kAtlas.size());
    for (const auto& n : builtin_map_names()) {
      if (n == name) return builtin_map(name);
    }
    return builtin_schema(name);
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot read " + spec);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(spec + ": " + e.what());
  }
  return document_from_json(j);
}

std::string braces(const std::set<VertexId>& vs) {
  std::string out = "{";
  for (const auto& v : vs) {
    if (out.size() > 1) out += ",";
    out += v.str();
  }
  return out + "}";
}

std::optional<VertexId> start_vertex(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (!VertexId::is_valid(s)) throw UsageError("bad start vertex '" + s + "'");
  return VertexId(s);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string headline(const ClassificationReport& r) {
  switch (r.kind()) {
    case EulerKind::I:
      return r.degenerate ? "Type I (degenerate)"
                          : "Type I — circuits from every vertex";
    case EulerKind::II:
      return "Type II — start/end " + braces(r.feasible_starts);
    case EulerKind::III:
      break;
  }
  return "Type III — no Eulerian trail";
}

int cmd_classify(const std::string& input, bool json) {
  const ClassificationReport r = classify(graph_of(load_input(input)));
  if (json) {
    print_json(to_json(r));
  } else {
    std::cout << headline(r) << "\n";
    if (const auto* three = std::get_if<TypeIII>(&r.euler_type)) {
      std::cout << "reason: " << to_string(three->reason);
      if (three->reason == NoTrailReason::OddCount) std::cout << "(" << three->odd_count << ")";
      std::cout << "\n";
    }
    std::cout << "odd vertices: " << braces(r.odd_vertices) << "\n";
    std::cout << "feasible starts: " << braces(r.feasible_starts) << "\n";
    std::cout << "degrees:";
    for (const auto& [v, d] : r.degree_table) std::cout << " " << v << "=" << d;
    std::cout << "\n";
  }
  return r.kind() == EulerKind::III ? kNo : kOk;
}

int report_no_trail(const std::string& why, bool json) {
  if (json) {
    print_json({{"trails", Json::array()}, {"error", why}});
  } else {
    std::cout << "no trail\n";
  }
  std::cerr << why << "\n";
  return kNo;
}

int cmd_trails(const std::string& input, const std::string& start, bool all,
               std::size_t limit, std::uint64_t budget, bool json, bool counted) {
  const Multigraph g = graph_of(load_input(input));
  const auto from = start_vertex(start);
  std::vector<Trail> trails;
  try {
    if (all) {
      EnumerateOptions opts;
      opts.start = from;
      opts.budget = budget;
      opts.max_results = limit;
      trails = enumerate_trails(g, opts);
    } else {
      trails.push_back(find_trail(g, from));
    }
  } catch (const EngineError& e) {
    if (e.code() == ErrorCode::NoTrail || e.code() == ErrorCode::InfeasibleStart) {
      return report_no_trail(e.what(), json);
    }
    if (e.code() == ErrorCode::BudgetExceeded) {
      std::cerr << e.what() << "\n";
      std::cout << "budget exceeded\n";
      return kNo;
    }
    throw;
  }
  if (trails.empty()) return report_no_trail("no Eulerian trail", json);
  if (json) {
    Json out = Json::array();
    for (const auto& t : trails) out.push_back(render_trail(t));
    print_json({{"trails", std::move(out)}, {"count", trails.size()}});
  } else {
    for (const auto& t : trails) std::cout << render_trail(t) << "\n";
    if (counted) std::cout << trails.size() << " trails\n";
  }
  return kOk;
}

int cmd_validate(const std::string& input, const std::string& text, bool json) {
  const Multigraph g = graph_of(load_input(input));
  const TrailReport r = validate_trail(parse_trail(text), g);
  if (json) {
    print_json(to_json(r));
  } else {
    std::cout << to_string(r.status);
    if (r.eulerian()) std::cout << (r.is_circuit ? " circuit" : " trail");
    std::cout << "\n";
    for (const auto& v : r.violations) std::cout << describe(v) << "\n";
  }
  return r.eulerian() ? kOk : kNo;
}

int cmd_edits(const std::string& input, const std::string& op,
              const std::string& target, bool json) {
  const Multigraph g = graph_of(load_input(input));
  const EulerKind kind = euler_kind_from_string(target);
  EditSearch search;
  if (op == "add") {
    search = single_additions(g, kind);
  } else if (op == "remove") {
    search = single_removals(g, kind);
  } else {
    search = bridge_moves(g, kind);
  }
  if (json) {
    print_json(to_json(search));
  } else {
    for (const auto& p : search.proposals) {
      std::cout << describe(p.edit) << " -> Type " << to_string(kind_of(p.resulting_type))
                << " starts " << braces(p.resulting_feasible_starts)
                << (p.degenerate ? " [degenerate]" : "") << "\n";
    }
    for (const auto& r : search.rejected) {
      std::cout << "rejected: " << describe(r.edit) << " (Disconnects)\n";
    }
    std::cout << search.proposals.size() << " proposals\n";
  }
  return search.proposals.empty() ? kNo : kOk;
}

int cmd_translate(const std::string& input) {
  print_json(to_json(graph_of(load_input(input))));
  return kOk;
}

int cmd_choreo(const std::string& input, const std::string& start,
               std::size_t beats) {
  const InputDocument doc = load_input(input);
  const Schema schema = std::holds_alternative<Schema>(doc)
                            ? std::get<Schema>(doc)
                            : schema_from_graph(graph_of(doc));
  try {
    print_json(to_json(choreograph(schema, start_vertex(start), beats)));
  } catch (const EngineError& e) {
    if (e.code() == ErrorCode::NoTrail || e.code() == ErrorCode::InfeasibleStart) {
      return report_no_trail(e.what(), true);
    }
    throw;
  }
  return kOk;
}

int cmd_atlas(const std::string& name, bool json) {
  if (!name.empty()) {
    const InputDocument d = load_input("atlas:" + name);
    print_json(std::visit([](const auto& x) { return to_json(x); }, d));
    return kOk;
  }
  if (json) {
    print_json({{"maps", builtin_map_names()}, {"schemas", builtin_schema_names()}});
    return kOk;
  }
  for (const auto& n : builtin_map_names()) {
    std::cout << std::left << std::setw(26) << "atlas:" + n << "map     "
              << headline(classify(map_to_graph(builtin_map(n)))) << "\n";
  }
  for (const auto& n : builtin_schema_names()) {
    std::cout << std::left << std::setw(26) << "atlas:" + n << "schema  "
              << headline(classify(builtin_schema(n).graph)) << "\n";
  }
  return kOk;
}

int cmd_serve(const std::string& bind, bool atlas_readonly, const std::string& persist) {
  api::ServeOptions opts;
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw UsageError("--bind expects host:port");
  opts.host = bind.substr(0, colon);
  try {
    opts.port = std::stoi(bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad port in --bind " + bind);
  }
  opts.service.atlas_readonly = atlas_readonly;
  if (!persist.empty()) opts.persist_path = persist;
  return api::serve(opts) ? kOk : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eulerian trails on multigraphs, bridge maps and dance schemas"};
  app.require_subcommand(1);

  std::string input, start, trail_text, op, target, name, bind = "127.0.0.1:8080",
                                                         persist;
  bool json = false, all = false, atlas_readonly = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::size_t beats = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  const std::string input_help = "graph/map/schema JSON file, or atlas:NAME";

  auto* classify_cmd = app.add_subcommand("classify", "Euler type, odd vertices, feasible starts");
  classify_cmd->add_option("input", input, input_help)->required();
  classify_cmd->add_flag("--json", json);

  auto* solve = app.add_subcommand("solve", "print an Eulerian trail");
  solve->add_option("input", input, input_help)->required();
  solve->add_option("--start", start, "start vertex");
  solve->add_flag("--all", all, "enumerate instead of constructing one trail");
  solve->add_option("--limit", limit, "maximum trails printed with --all");
  solve->add_option("--budget", budget, "search node budget for --all");
  solve->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "list every Eulerian trail");
  enumerate->add_option("input", input, input_help)->required();
  enumerate->add_option("--start", start, "start vertex");
  enumerate->add_option("--limit", limit, "maximum trails printed");
  enumerate->add_option("--budget", budget, "search node budget");
  enumerate->add_flag("--json", json);

  auto* validate = app.add_subcommand("validate", "check a trail string against a graph");
  validate->add_option("input", input, input_help)->required();
  validate->add_option("trail", trail_text, "trail string, e.g. A1D6C5B4A3B2A")->required();
  validate->add_flag("--json", json);

  auto* edits = app.add_subcommand("edits", "single edits reaching a target type");
  edits->add_option("input", input, input_help)->required();
  edits->add_option("--op", op)->required()->check(CLI::IsMember({"add", "remove", "move"}));
  edits->add_option("--target", target)->required()->check(CLI::IsMember({"I", "II", "III"}));
  edits->add_flag("--json", json);

  auto* translate = app.add_subcommand("translate", "print the graph JSON of a map");
  translate->add_option("input", input, input_help)->required();
  translate->add_flag("--json", json, "accepted for uniformity; output is always JSON");

  auto* choreo = app.add_subcommand("choreo", "Eulerian choreography JSON for a schema");
  choreo->add_option("input", input, input_help)->required();
  choreo->add_option("--start", start, "start position");
  choreo->add_option("--beats", beats, "beats per step")->check(CLI::PositiveNumber);
  choreo->add_flag("--json", json, "accepted for uniformity; output is always JSON");

  auto* atlas = app.add_subcommand("atlas", "list builtins, or dump one");
  atlas->add_option("name", name, "builtin name");
  atlas->add_flag("--json", json);

  auto* serve = app.add_subcommand("serve", "run the local HTTP engine");
  serve->add_option("--bind", bind, "host:port");
  serve->add_flag("--atlas-readonly", atlas_readonly);
  serve->add_option("--persist", persist, "snapshot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(input, json);
    if (*solve) return cmd_trails(input, start, all, limit, budget, json, false);
    if (*enumerate) return cmd_trails(input, start, true, limit, budget, json, true);
    if (*validate) return cmd_validate(input, trail_text, json);
    if (*edits) return cmd_edits(input, op, target, json);
    if (*translate) return cmd_translate(input);
    if (*choreo) return cmd_choreo(input, start, beats);
    if (*atlas) return cmd_atlas(name, json);
    if (*serve) return cmd_serve(bind, atlas_readonly, persist);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EngineError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
