#pragma once

#include <string>

#include <json.hpp>

#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/procedures.hpp"
#include "ramsey/solver.hpp"

// JSON forms of the certificates the CLI emits and the verify subcommand
// reads back. Vertex sets serialize as sorted arrays.

namespace ramsey {

nlohmann::json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j, int universe);

nlohmann::json to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Packing& p);
Packing packing_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Tie& t, int universe);
Tie tie_from_json(const nlohmann::json& j, int universe);

nlohmann::json to_json(const Join& jn);
Join join_from_json(const nlohmann::json& j, int universe);

nlohmann::json to_json(const TilingCertificate& c);
TilingCertificate tiling_from_json(const nlohmann::json& j, int universe);

nlohmann::json partition_to_json(const PartitionSpec& p);
PartitionSpec partition_from_json(const nlohmann::json& j, int universe);

// Deterministic fields only (node counts are stable for the sequential
// search; wall-clock time goes to stderr, never into this object).
nlohmann::json to_json(const RamseyResult& r, const std::string& witness_path);

} // namespace ramsey
