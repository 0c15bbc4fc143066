#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lace/error.hpp"
#include "lace/sieve.hpp"

namespace lace {

using Json = nlohmann::ordered_json;

// Parsers throw Error(parse_error) on schema violations and pass through the
// domain errors raised by the constructors (bad thresholds, missing table
// entries, out-of-range indices).

/// {"kind": "identity"|"bonferroni"|"brun"|"brydges_spencer"|"table", "n": int,
///  "k": int?, "thresholds": [int]?, "dots": int?, "table": [{"s": [int], "l": [int]}]?}
LaceMap map_from_json(const Json& j, const Limits& limits = {});
Json map_to_json(const LaceMap& map);

/// {"n": int, "labels": [string]?, "elements": [{"w": "int-or-rational", "props": [int]}]}
WeightedInstance instance_from_json(const Json& j);
Json instance_to_json(const WeightedInstance& inst);

/// {"dots": n, "arcs": [[i, j], ...]}
ArcSet arcset_from_json(const Json& j);
Json arcset_to_json(const ArcSet& arcs);

Json subset_to_json(PropSubset s);
PropSubset subset_from_json(const Json& j, int universe_size);

Json lace_to_json(const Lace& lace, const PropertyUniverse& universe);
Json laces_to_json(const std::vector<Lace>& laces, const LaceMap& map);
Json axiom_report_to_json(const AxiomReport& report);
Json parity_to_json(const ParityAnalysis& analysis);
Json expansion_report_to_json(const ExpansionReport& report, const PropertyUniverse& universe);
Json sieve_bound_to_json(const SieveBound& bound, const PropertyUniverse& universe);

/// {"error": {"code": ..., "message": ..., "detail": ...?}}
Json error_to_json(const Error& e);

/// CSV of the "terms" array of an expansion or sieve report:
/// lace,lace_labels,compatible,saturated,N,signed (lists space-separated).
std::string terms_to_csv(const Json& report);

}  // namespace lace
