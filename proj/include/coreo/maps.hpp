#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coreo/geometry.hpp"
#include "coreo/multigraph.hpp"
#include "coreo/trails.hpp"

namespace coreo {

struct Region {
  std::string label;
  /// Optional backdrop outline for the studio; may be empty.
  std::vector<Point> polygon;
  friend bool operator==(const Region&, const Region&) = default;
};

/// Regions joined by bridges. Translating to a graph keeps every id, so a
/// trail on the graph reads directly as a bridge itinerary on the map.
class MapInstance {
 public:
  MapInstance() = default;
  explicit MapInstance(std::string name) : name_(std::move(name)) {}

  /// Throws DuplicateVertexId.
  void add_region(const VertexId& id, Region region);
  /// Throws UnknownVertex or DuplicateEdgeId.
  void add_bridge(EdgeId id, const VertexId& a, const VertexId& b);
  /// Throws UnknownEdge.
  void remove_bridge(EdgeId id);
  /// Removes a region with no bridges. Throws UnknownVertex, or
  /// InvalidDocument while bridges still reach it.
  void remove_region(const VertexId& id);

  const std::string& name() const { return name_; }
  const std::map<VertexId, Region>& regions() const { return regions_; }
  const std::map<EdgeId, Endpoints>& bridges() const { return bridges_; }

  friend bool operator==(const MapInstance&, const MapInstance&) = default;

 private:
  std::string name_;
  std::map<VertexId, Region> regions_;
  std::map<EdgeId, Endpoints> bridges_;
};

Multigraph map_to_graph(const MapInstance& m);

/// Bridge-level counterpart of apply_edit on graphs; labels and polygons are
/// kept.
MapInstance apply_edit(const MapInstance& m, const EdgeEdit& edit);

/// One line per crossing, e.g. "Kneiphof (A) -> bridge 1 -> Altstadt (B)".
/// Throws UnknownVertex/UnknownEdge if the trail does not fit the map.
std::vector<std::string> itinerary(const Trail& t, const MapInstance& m);

/// Atlas keys: koenigsberg, mathigon2, fig2_bottom_left, fig2_bottom_right,
/// leiden. Throws UnknownName.
MapInstance builtin_map(std::string_view name);

std::vector<std::string> builtin_map_names();

}  // namespace coreo
