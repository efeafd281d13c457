#include "loopcut/cutset.hpp"

#include <algorithm>

namespace loopcut {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::A1: return "A1";
        case Algorithm::A2: return "A2";
        case Algorithm::Random: return "RANDOM";
        case Algorithm::Exact: return "EXACT";
    }
    return "?";
}

bool Cutset::used_fallback() const {
    return std::any_of(trace.begin(), trace.end(),
                       [](const TraceEntry& t) { return t.fallback; });
}

nlohmann::ordered_json Cutset::to_json() const {
    nlohmann::ordered_json j;
    j["algorithm"] = algorithm_name(algorithm);
    j["members"] = members;
    j["trace"] = nlohmann::ordered_json::array();
    for (const TraceEntry& t : trace) {
        nlohmann::ordered_json e;
        e["picked"] = t.picked;
        e["degree"] = t.degree;
        e["values"] = t.values;
        if (t.fallback) e["fallback"] = true;
        e["pruned"] = t.pruned;
        j["trace"].push_back(std::move(e));
    }
    if (algorithm == Algorithm::Exact) j["optimal"] = optimal;
    return j;
}

std::string Cutset::serialize() const { return to_json().dump(); }

}  // namespace loopcut
