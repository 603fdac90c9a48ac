#pragma once

#include <string>

#include <json.hpp>

#include "qchrom/designs.hpp"
#include "qchrom/representation.hpp"
#include "qchrom/spectrum.hpp"

namespace qchrom {

// ordered_json keeps insertion order, so identical inputs serialize to
// byte-identical documents. Big integers go out as decimal strings.
using Json = nlohmann::ordered_json;

Json type_to_json(const TypeVector& t);
TypeVector type_from_json(const Json& j);

Json spectrum_report_to_json(const SpectrumReport& report);

Json design_to_json(const Design& d);
Design design_from_json(const Json& j);

Json flat_rep_to_json(const FlatRep& rep, bool emit_matrix = false);

Json extremal_verdict_to_json(const ExtremalVerdict& v);
Json appendix_verdict_to_json(const AppendixClaimVerdict& v);
Json subgraph_verdict_to_json(const SubgraphVerdict& v);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace qchrom
