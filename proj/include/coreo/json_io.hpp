#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "coreo/analysis.hpp"
#include "coreo/choreography.hpp"
#include "coreo/inverse.hpp"
#include "coreo/maps.hpp"
#include "coreo/multigraph.hpp"
#include "coreo/notation.hpp"

namespace coreo {

using Json = nlohmann::json;

// Readers throw EngineError(InvalidDocument) on anything that does not match
// the documented shapes, including bad ids.

VertexId vertex_id_from_json(const Json& j);
EdgeId edge_id_from_json(const Json& j);

Json to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

Json to_json(const MapInstance& m);
MapInstance map_from_json(const Json& j);

/// Graph document plus "positions" (vertex -> [x, y]) and "styles"
/// (edge id as a string -> label).
Json to_json(const Schema& s);
Schema schema_from_json(const Json& j);

/// Wraps a bare graph: positions on a unit circle in id order, every step
/// styled kDefaultStepStyle.
Schema schema_from_graph(const Multigraph& g);

Json to_json(const Choreography& c);
Choreography choreography_from_json(const Json& j);

Json to_json(const ClassificationReport& r);
Json to_json(const TrailReport& r);
Json to_json(const ChoreographyReport& r);

/// {"kind":"add","add":["A","B"],"id":8} | {"kind":"remove","remove":3} |
/// {"kind":"move","remove":3,"add":["C","D"]}
Json to_json(const EdgeEdit& e);
/// An "add" without "id" takes `context.next_edge_id()`.
EdgeEdit edit_from_json(const Json& j, const Multigraph& context);

Json to_json(const EditProposal& p);
Json to_json(const RejectedEdit& r);
Json to_json(const EditSearch& s);

std::string describe(const EdgeEdit& e);

/// Any of the three input documents. Detection: "regions" means a map,
/// "positions" or "styles" a schema, otherwise a bare graph.
using InputDocument = std::variant<Multigraph, MapInstance, Schema>;
InputDocument document_from_json(const Json& j);
Multigraph graph_of(const InputDocument& d);

EulerKind euler_kind_from_string(const std::string& s);

}  // namespace coreo
