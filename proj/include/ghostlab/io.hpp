#pragma once

#include "ghostlab/age.hpp"
#include "ghostlab/counting.hpp"
#include "ghostlab/singularity.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace ghostlab {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
public:
    using Error::Error;
};

/// Reads and parses a JSON file; errors name the file.
Json read_json_file(const std::string& path);

GraphSpec graph_spec_from_json(const Json& j);
Json to_json(const GraphSpec& spec);

/// {"<key>": n, "values": {edge-id: int}}; omitted edges are 0.
Cochain1 cochain_from_json(const Json& j, const DualGraph& graph, const std::string& modulus_key = "modulus");
Json cochain_to_json(const Cochain1& c, const DualGraph& graph, const std::string& modulus_key = "modulus");

MultiplicityCochain multiplicity_from_json(const Json& j, const DualGraph& graph);
Json to_json(const MultiplicityCochain& M, const DualGraph& graph);

SymmetricFunction ghost_from_json(const Json& j, const DualGraph& graph);
Json to_json(const SymmetricFunction& a, const DualGraph& graph);

CurveAnnotations annotations_from_json(const Json& j);
Json to_json(const CurveAnnotations& notes);

Json to_json(const AgeReport& report, const DualGraph& graph);
Json to_json(const GhostGroup& group, const DualGraph& graph);
Json to_json(const SingularityReport& report, const DualGraph& graph);
Json to_json(const SweepReport& report);
Json to_json(const FiberAudit& audit, const DualGraph& graph);
Json to_json(const BoundaryDegrees& table);

/// Compact "(v1,v2,...)" rendering of a value vector.
std::string values_string(const std::vector<Residue>& values);

/// Graphviz rendering of the contraction towers: one cluster per stage,
/// edges labelled (M(e), ν_p(e)).
std::string tower_dot(const DualGraph& graph, const MultiplicityCochain& M);

}  // namespace ghostlab
