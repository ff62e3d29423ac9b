#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "coreo/multigraph.hpp"

namespace coreo::detail {

// Dense view of a Multigraph for the trail algorithms. Vertex and edge
// indices follow id order; adjacency lists are sorted by edge index, and a
// loop appears once in its vertex's list.
struct IndexedGraph {
  struct Arc {
    std::size_t edge;
    std::size_t to;
  };

  std::vector<VertexId> vertex_ids;
  std::vector<EdgeId> edge_ids;
  std::vector<std::vector<Arc>> adjacency;

  explicit IndexedGraph(const Multigraph& g) {
    vertex_ids = g.vertex_ids();
    edge_ids = g.edge_ids();
    adjacency.resize(vertex_ids.size());
    std::size_t e = 0;
    for (const auto& [id, ends] : g.edges()) {
      const std::size_t a = index_of(ends.first);
      const std::size_t b = index_of(ends.second);
      adjacency[a].push_back({e, b});
      if (a != b) adjacency[b].push_back({e, a});
      ++e;
    }
  }

  std::size_t index_of(const VertexId& v) const {
    return static_cast<std::size_t>(
        std::lower_bound(vertex_ids.begin(), vertex_ids.end(), v) -
        vertex_ids.begin());
  }
};

}  // namespace coreo::detail
