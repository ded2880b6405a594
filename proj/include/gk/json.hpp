// JSON views of graphs, spectra and verifier reports. Objects use
// nlohmann::json's default (sorted) key order.

#ifndef GK_JSON_HPP_
#define GK_JSON_HPP_

#include <nlohmann/json.hpp>

#include "gk/group_id.hpp"
#include "gk/prime_graph.hpp"
#include "gk/spectra.hpp"
#include "gk/verifier.hpp"

namespace gk {

  inline constexpr int kJsonSchemaVersion = 1;

  void to_json(nlohmann::json& j, GroupId const& g);
  void to_json(nlohmann::json& j, PrimeGraph const& g);
  void to_json(nlohmann::json& j, DegreePattern const& d);
  void to_json(nlohmann::json& j, OrderComponents const& c);
  void to_json(nlohmann::json& j, Spectrum const& s);
  void to_json(nlohmann::json& j, IndependentSet const& s);
  void to_json(nlohmann::json& j, VasilievCheck const& c);
  void to_json(nlohmann::json& j, CaseReport const& r);

  // Everything `gk graph --json` prints for one group.
  nlohmann::json graph_summary(GroupId const& g);

}  // namespace gk

#endif  // GK_JSON_HPP_
