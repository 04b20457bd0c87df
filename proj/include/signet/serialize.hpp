#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "signet/evaluate.hpp"
#include "signet/generate.hpp"
#include "signet/metrics.hpp"
#include "signet/model.hpp"

namespace signet {

/// Bumped whenever a field is renamed or removed from any document below.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const TriangleCensus& census);
nlohmann::json to_json(const GraphStats& stats);
nlohmann::json to_json(const LearnConfig& config);
nlohmann::json to_json(const ModelParams& params);
nlohmann::json to_json(const GenerationCounters& counters);
nlohmann::json to_json(const NetworkSummary& summary);
nlohmann::json to_json(const PropertyDeltas& deltas);
nlohmann::json to_json(const EvaluationReport& report);

/// Reads a `model_params` document. Throws ParseError on a missing field or
/// a schema_version this build does not understand.
ModelParams params_from_json(const nlohmann::json& doc);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const nlohmann::json& doc, const std::filesystem::path& path);

}  // namespace signet
