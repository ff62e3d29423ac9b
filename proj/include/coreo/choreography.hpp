#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coreo/geometry.hpp"
#include "coreo/multigraph.hpp"
#include "coreo/notation.hpp"
#include "coreo/trails.hpp"

namespace coreo {

inline constexpr std::string_view kDefaultStepStyle = "step";

/// A dance floor plan: positions are vertices, steps are edges, and every
/// step carries an opaque style label.
struct Schema {
  Multigraph graph;
  std::map<VertexId, Point> positions;
  std::map<EdgeId, std::string> styles;

  friend bool operator==(const Schema&, const Schema&) = default;
};

/// Throws InvalidDocument unless every vertex has a position and every edge a
/// style, with nothing extra.
void check_schema(const Schema& s);

/// Applies an edge edit to the schema's graph, keeping styles in step: new
/// edges get kDefaultStepStyle, moved edges keep theirs.
Schema apply_edit(const Schema& s, const EdgeEdit& edit);

struct Choreography {
  Trail trail;
  std::vector<std::string> styles;
  std::vector<std::size_t> beats;

  friend bool operator==(const Choreography&, const Choreography&) = default;
};

/// Eulerian choreography through find_trail; beat i is i * beats_per_step.
/// Throws InvalidArgument (beats_per_step == 0), NoTrail, InfeasibleStart.
Choreography choreograph(const Schema& s,
                         const std::optional<VertexId>& start = std::nullopt,
                         std::size_t beats_per_step = 1);

struct ChoreographyReport {
  TrailReport trail;
  /// Steps whose style differs from the schema's label for that edge.
  std::vector<std::size_t> style_mismatches;
  /// Beats do not start at 0 or are not strictly increasing.
  bool beat_order = false;
  /// Styles or beats are not aligned with the trail's steps.
  bool length_mismatch = false;

  bool valid() const {
    return trail.eulerian() && style_mismatches.empty() && !beat_order &&
           !length_mismatch;
  }
  std::vector<std::string> describe() const;
};

ChoreographyReport validate_choreography(const Choreography& c,
                                         const Schema& s);

/// GC1, GC2, GC3 (dance schemas) and G1..G6, C1..C3 (worksheet graphs).
/// Throws UnknownName.
Schema builtin_schema(std::string_view name);

std::vector<std::string> builtin_schema_names();

}  // namespace coreo
