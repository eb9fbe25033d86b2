#include "parfpt/metrics_json.hpp"

namespace parfpt {

nlohmann::ordered_json metrics_json(const Verdict& verdict, const RunMetrics& metrics,
                                    const Instance& original, const std::string& fingerprint) {
    nlohmann::ordered_json j;
    j["answer"] = verdict.answer == Answer::yes ? "yes" : "no";
    if (verdict.witness)
        j["witnessSize"] = verdict.witness->size();
    else
        j["witnessSize"] = nullptr;
    j["k"] = original.k;
    j["n"] = original.graph.vertex_count();
    j["m"] = original.graph.edge_count();
    j["workUnits"] = metrics.work_units;
    j["spanUnits"] = metrics.span_units;
    j["treeSize"] = metrics.tree_size;
    j["treeDepth"] = metrics.tree_depth;
    auto stages = nlohmann::ordered_json::array();
    for (const auto& s : metrics.stages) {
        nlohmann::ordered_json stage;
        stage["name"] = s.name;
        stage["inSize"] = s.in_size();
        stage["outSize"] = s.out_size();
        stage["work"] = s.work;
        stages.push_back(std::move(stage));
    }
    j["stages"] = std::move(stages);
    j["wallClockSec"] = metrics.wall_clock_sec;
    j["configFingerprint"] = fingerprint;
    return j;
}

nlohmann::ordered_json metrics_json_stable(const Verdict& verdict, const RunMetrics& metrics,
                                           const Instance& original,
                                           const std::string& fingerprint) {
    auto j = metrics_json(verdict, metrics, original, fingerprint);
    j.erase("wallClockSec");
    return j;
}

}  // namespace parfpt
