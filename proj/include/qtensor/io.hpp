#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "qtensor/decompose.hpp"
#include "qtensor/partition.hpp"
#include "qtensor/representation.hpp"

namespace qtensor {

using Json = nlohmann::json;

/// Parses text as JSON; malformed input raises ParseError with position info.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// {"vertices": [...], "arrows": [{"name":..., "source":..., "target":...}]},
// endpoints given by vertex label.
Quiver quiver_from_json(const Json& j);
Json quiver_to_json(const Quiver& q);

// {"dims": [...], "maps": {"alpha": [["1/2","0"],["0","1"]], ...}} with
// rationals as "p/q" strings (bare integers also accepted on input).
Representation representation_from_json(const Quiver& q, const Json& j);
Json representation_to_json(const Quiver& q, const Representation& m);

// {"entries": {"1,1,2,1": "3", ...}} with big integers as decimal strings.
Decomposition decomposition_from_json(const RootSystem& rs, const Json& j);
Json decomposition_to_json(const RootSystem& rs, const Decomposition& a);

/// A module file is either a decomposition ("entries") or an explicit
/// representation ("dims"/"maps"); explicit inputs are decomposed.
Decomposition module_from_json(const RootSystem& rs, const Json& j);

// {"E": {"a": [["a","a"],["a","b"]], ...}} keyed by vertex label.
PartitioningMorphismSpec partition_from_json(const Quiver& q, const Json& j);
Json partition_to_json(const Quiver& q, const PartitioningMorphismSpec& p);

Json validation_report_to_json(const Quiver& q, const ValidationReport& rep);

/// Versioned fusion-table cache, keyed by the quiver hash. load returns
/// nothing when the file is absent, has a different version, or was written
/// for a different quiver.
inline constexpr int kFusionCacheVersion = 1;
std::optional<FusionTable> load_fusion_cache(const std::string& path, const Quiver& q);
void save_fusion_cache(const std::string& path, const FusionTable& t);

/// Builds the fusion table, going through the cache directory if given.
FusionTable cached_fusion_table(const Quiver& q, const std::string& cache_dir, int max_l = 8);

}  // namespace qtensor
