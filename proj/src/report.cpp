#include "mct/report.hpp"

#include <stdexcept>

namespace mct {

Json transcript_to_json(const std::vector<Pick>& picks, const Graph& g) {
  Json out = Json::array();
  for (const auto& p : picks)
    out.push_back({{"player", to_string(player_of(p.role))},
                   {"vertex", p.vertex},
                   {"label", g.label(p.vertex)}});
  return out;
}

std::vector<Pick> transcript_from_json(const Json& j) {
  std::vector<Pick> picks;
  for (const auto& item : j) {
    const auto player = item.at("player").get<std::string>();
    Role role;
    if (player == "alice") {
      role = Role::kBreaker;
    } else if (player == "bob") {
      role = Role::kMaker;
    } else {
      throw std::invalid_argument("unknown player '" + player + "'");
    }
    picks.push_back({role, item.at("vertex").get<int>()});
  }
  return picks;
}

Json outcome_to_json(Role winner, std::optional<int> threshold, Method method) {
  Json out = {{"winner", to_string(player_of(winner))}};
  if (threshold) out["threshold"] = *threshold;
  out["method"] = to_string(method);
  return out;
}

Json threshold_to_json(const ThresholdResult& r, const Graph& g) {
  Json out;
  out["threshold"] = r.value ? Json(*r.value) : Json(nullptr);
  out["method"] = to_string(r.method);
  out["note"] = r.note;
  out["degenerate"] = r.degenerate;
  if (r.witness) {
    Json xs = Json::array();
    for (int v : r.witness->x) xs.push_back(g.label(v));
    out["witness"] = {{"x", xs}, {"t", r.witness->t}};
  }
  if (!r.trace.empty()) out["transcript"] = transcript_to_json(r.trace, g);
  return out;
}

}  // namespace mct
