#pragma once

#include <string>

#include "json.hpp"

#include "amalgam/theorems.hpp"

namespace amalgam::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json decision_json(const Decision& d);
Json classification_json(const ClassificationReport& r);
Json theorem_json(const TheoremCheckResult& t);
Json spectrum_json(const AmalgamatedRing& m, const SpectrumTransferReport& s);
Json spec_error_json(const SpecError& e);

/// Aggregate report of a catalog run. Nothing in it depends on the job count.
Json run_json(const CatalogRun& run, const RunConfig& config, const std::string& timestamp);

/// Wraps a payload with the schema version and timestamp header.
Json envelope(const std::string& kind, const std::string& timestamp);

std::string utc_timestamp();

/// The report text with the top-level timestamp removed.
std::string without_timestamp(const std::string& text);

std::string text_summary(const CatalogRun& run);

}  // namespace amalgam::report
