#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fusion/audit.hpp"
#include "fusion/catalog.hpp"
#include "fusion/cohomology.hpp"
#include "fusion/constructions.hpp"
#include "fusion/ring.hpp"
#include "fusion/ring_ops.hpp"
#include "fusion/solver.hpp"

namespace fusion {

using Json = nlohmann::ordered_json;

// Canonical ring JSON: rank, labels, unit, dual pairs, tensor quadruples, optional grading.
Json ring_to_json(const FusionRing& ring);
FusionRing ring_from_json(const Json& j);

Json grading_to_json(const Grading& grading, const std::vector<std::string>& labels);
Grading grading_from_json(const Json& j, const std::vector<std::string>& labels);

// Ring JSON with "dims" and "known" in place of "tensor"; absent entries are unknown.
Json partial_to_json(const PartialRing& p);
PartialRing partial_from_json(const Json& j);

Json group_to_json(const FiniteAbelianGroup& g);
Json cohomology_to_json(const CohomologyGroup& g);
Json theorem_row_to_json(const TheoremRow& row);
Json audit_to_json(const AuditReport& report);
Json separation_to_json(const SeparationVerdict& v);
Json catalog_to_json(const BPCatalogEntry& entry);
Json extension_to_json(const ExtensionRecord& r);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fusion
