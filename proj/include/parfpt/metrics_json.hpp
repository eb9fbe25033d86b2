#pragma once

#include <json.hpp>

#include "parfpt/engine.hpp"

namespace parfpt {

// One run as a single JSON object with stable key order:
// { answer, witnessSize, k, n, m, workUnits, spanUnits, treeSize, treeDepth,
//   stages, wallClockSec, configFingerprint }.
// witnessSize is null on a no answer. wallClockSec is the only
// schedule-dependent field.
nlohmann::ordered_json metrics_json(const Verdict& verdict, const RunMetrics& metrics,
                                    const Instance& original, const std::string& fingerprint);

// The same object with wallClockSec removed, for byte-identity comparisons.
nlohmann::ordered_json metrics_json_stable(const Verdict& verdict, const RunMetrics& metrics,
                                           const Instance& original, const std::string& fingerprint);

}  // namespace parfpt
