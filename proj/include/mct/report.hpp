#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "mct/game.hpp"
#include "mct/graph.hpp"

namespace mct {

using Json = nlohmann::ordered_json;

// [{player, vertex, label}, ...] with player "alice" or "bob".
Json transcript_to_json(const std::vector<Pick>& picks, const Graph& g);
std::vector<Pick> transcript_from_json(const Json& j);

// {winner, threshold?, method}
Json outcome_to_json(Role winner, std::optional<int> threshold, Method method);

// {threshold, method, note, degenerate, witness?, transcript?}; an absent
// threshold is null.
Json threshold_to_json(const ThresholdResult& r, const Graph& g);

}  // namespace mct
