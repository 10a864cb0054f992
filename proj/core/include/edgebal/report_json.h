#pragma once

#include <nlohmann/json.hpp>

#include "edgebal/balance.h"
#include "edgebal/classify.h"

namespace edgebal {

struct CatalogEntry;

// Key order is part of the output contract; everything uses ordered_json.
using Json = nlohmann::ordered_json;

// Ascending array, or the string "all" for the vacuous case.
Json to_json(const TValues& values);
// {"t": .., "gamma": ..} or null. `gamma_key` names the constant.
Json to_json(const std::optional<NicelyBalanced>& nb, const char* gamma_key);
Json to_json(const EdgeBalanceCounts& counts);
Json to_json(const EdgePartition& partition);
Json to_json(const ClassificationReport& report, bool with_edges = true);
Json catalog_json(const CatalogEntry& entry);

}  // namespace edgebal
