#include "coreo/notation.hpp"

#include <charconv>

#include "coreo/error.hpp"

namespace coreo {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw EngineError(ErrorCode::Malformed,
                    "malformed trail '" + std::string(text) + "': " + why);
}

}  // namespace

Trail parse_trail(std::string_view text) {
  if (text.empty()) malformed(text, "empty");
  Trail t;
  std::size_t i = 0;
  bool expect_vertex = true;
  while (i < text.size()) {
    const char c = text[i];
    if (!is_upper(c) && !is_digit(c)) {
      malformed(text, "illegal character at offset " + std::to_string(i));
    }
    if (is_upper(c) != expect_vertex) {
      malformed(text, std::string(expect_vertex ? "expected a vertex"
                                                : "expected an edge") +
                          " at offset " + std::to_string(i));
    }
    std::size_t j = i;
    if (expect_vertex) {
      while (j < text.size() && is_upper(text[j])) ++j;
      t.vertices.emplace_back(std::string(text.substr(i, j - i)));
    } else {
      while (j < text.size() && is_digit(text[j])) ++j;
      if (text[i] == '0') malformed(text, "edge ids are positive, no leading zeros");
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
      if (ec != std::errc{} || ptr != text.data() + j) {
        malformed(text, "edge id out of range");
      }
      t.edges.emplace_back(value);
    }
    expect_vertex = !expect_vertex;
    i = j;
  }
  if (expect_vertex) malformed(text, "ends on an edge");
  return t;
}

std::string render_trail(const Trail& t) {
  std::string out;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    out += t.vertices[i].str();
    if (i < t.edges.size()) out += std::to_string(t.edges[i].value());
  }
  return out;
}

std::string describe(const Violation& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, violation::BadShape>) {
          return "BadShape";
        } else if constexpr (std::is_same_v<T, violation::UnknownVertex>) {
          return "UnknownVertex(" + x.vertex.str() + ")";
        } else if constexpr (std::is_same_v<T, violation::UnknownEdge>) {
          return "UnknownEdge(" + std::to_string(x.edge.value()) + ")";
        } else if constexpr (std::is_same_v<T, violation::WrongEndpoints>) {
          return "WrongEndpoints(" + std::to_string(x.step) + ")";
        } else if constexpr (std::is_same_v<T, violation::RepeatedEdge>) {
          return "RepeatedEdge(" + std::to_string(x.edge.value()) + ")";
        } else {
          std::string s = "MissingEdges({";
          bool first = true;
          for (const auto& e : x.edges) {
            if (!first) s += ",";
            s += std::to_string(e.value());
            first = false;
          }
          return s + "})";
        }
      },
      v);
}

std::string to_string(TrailStatus s) {
  switch (s) {
    case TrailStatus::Eulerian: return "Eulerian";
    case TrailStatus::WellFormed: return "WellFormed";
    case TrailStatus::Invalid: return "Invalid";
  }
  return "?";
}

TrailReport validate_trail(const Trail& t, const Multigraph& g) {
  TrailReport report;
  if (t.vertices.size() != t.edges.size() + 1) {
    report.violations.emplace_back(violation::BadShape{});
    return report;
  }
  report.is_circuit = t.is_closed();

  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (!g.has_vertex(t.vertices[i])) {
      report.violations.emplace_back(violation::UnknownVertex{i, t.vertices[i]});
    }
  }
  std::set<EdgeId> seen;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeId e = t.edges[i];
    if (!g.has_edge(e)) {
      report.violations.emplace_back(violation::UnknownEdge{i, e});
      continue;
    }
    if (g.endpoints(e) != Endpoints(t.vertices[i], t.vertices[i + 1])) {
      report.violations.emplace_back(violation::WrongEndpoints{i});
    }
    if (!seen.insert(e).second) {
      report.violations.emplace_back(violation::RepeatedEdge{e});
    }
  }
  const bool structural = !report.violations.empty();

  violation::MissingEdges missing;
  for (const auto& [id, ends] : g.edges()) {
    if (!seen.contains(id)) missing.edges.insert(id);
  }
  if (!missing.edges.empty()) report.violations.emplace_back(std::move(missing));

  if (structural) {
    report.status = TrailStatus::Invalid;
  } else if (report.violations.empty()) {
    report.status = TrailStatus::Eulerian;
  } else {
    report.status = TrailStatus::WellFormed;
  }
  return report;
}

Trail rotate_circuit(const Trail& t, std::ptrdiff_t k) {
  if (t.vertices.size() != t.edges.size() + 1 || !t.is_closed()) {
    throw EngineError(ErrorCode::NotACircuit,
                      "only circuits can be rotated: " + render_trail(t));
  }
  const auto m = static_cast<std::ptrdiff_t>(t.edges.size());
  if (m == 0) return t;
  const std::ptrdiff_t shift = ((k % m) + m) % m;

  Trail out;
  out.edges.reserve(t.edges.size());
  out.vertices.reserve(t.vertices.size());
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    out.edges.push_back(t.edges[(shift + i) % m]);
    out.vertices.push_back(t.vertices[(shift + i) % m]);
  }
  out.vertices.push_back(out.vertices.front());
  return out;
}

Trail reverse_trail(const Trail& t) {
  return Trail{{t.vertices.rbegin(), t.vertices.rend()},
               {t.edges.rbegin(), t.edges.rend()}};
}

std::size_t TrailAudit::total_entries() const {
  std::size_t n = 0;
  for (const auto& [v, c] : traffic) n += c.entries;
  return n;
}

std::size_t TrailAudit::total_exits() const {
  std::size_t n = 0;
  for (const auto& [v, c] : traffic) n += c.exits;
  return n;
}

bool TrailAudit::is_eulerian_for(const Multigraph& g) const {
  return validate_trail(trail, g).eulerian();
}

TrailAudit entry_exit_audit(const Trail& t) {
  TrailAudit audit;
  audit.trail = t;
  audit.is_circuit = !t.vertices.empty() && t.is_closed();
  for (const auto& v : t.vertices) audit.traffic.try_emplace(v);
  for (std::size_t i = 0; i < t.edges.size() && i + 1 < t.vertices.size(); ++i) {
    ++audit.traffic[t.vertices[i]].exits;
    ++audit.traffic[t.vertices[i + 1]].entries;
  }
  return audit;
}

}  // namespace coreo
