#include "gk/json.hpp"

#include "gk/catalog.hpp"

namespace gk {

  namespace {
    nlohmann::json nat_json(Nat const& n) {
      if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(n);
      }
      return to_string(n);
    }
  }  // namespace

  void to_json(nlohmann::json& j, GroupId const& g) {
    j = g.to_string();
  }

  void to_json(nlohmann::json& j, PrimeGraph const& g) {
    auto edges = nlohmann::json::array();
    for (auto [p, q] : g.edges()) {
      edges.push_back({p, q});
    }
    j = {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
  }

  void to_json(nlohmann::json& j, DegreePattern const& d) {
    j = {{"primes", d.primes}, {"degrees", d.degrees}};
  }

  void to_json(nlohmann::json& j, OrderComponents const& c) {
    j = nlohmann::json::array();
    for (auto const& comp : c.components) {
      j.push_back({{"primes", comp.primes}, {"m", comp.m.to_string()}});
    }
  }

  void to_json(nlohmann::json& j, Spectrum const& s) {
    auto mu = nlohmann::json::array();
    for (auto const& m : s.mu) {
      mu.push_back(nat_json(m));
    }
    j = {{"mu", std::move(mu)}, {"source", to_string(s.source)}};
  }

  void to_json(nlohmann::json& j, IndependentSet const& s) {
    j = {{"size", s.size}, {"witness", s.witness}};
  }

  void to_json(nlohmann::json& j, VasilievCheck const& c) {
    j = {{"applicable", c.applicable}, {"t", c.t}, {"t2", c.t2}};
  }

  void to_json(nlohmann::json& j, CaseReport const& r) {
    nlohmann::json pivot = nullptr;
    if (r.forced.pivot) {
      pivot = {r.forced.pivot->first, r.forced.pivot->second};
    }
    j = {
        {"v", kJsonSchemaVersion},
        {"group", r.group},
        {"pivot", pivot},
        {"pattern", r.pattern},
        {"family",
         {{"size", r.family_size}, {"contains_gk", r.gk_in_family}}},
        {"forced",
         {{"members_with_pivot", r.forced.members_with_pivot},
          {"forced", r.forced.forced},
          {"equals_gk", r.forced.equals_gk}}},
        // Key names chosen so that "count" sorts first.
        {"alternatives",
         {{"count", r.alternatives.count},
          {"vasiliev_all_applicable", r.alternatives.all_vasiliev_applicable},
          {"witnesses", r.alternatives.witnesses}}},
        {"filter",
         {{"m", r.filter.m.to_string()},
          {"divisibility_survivors", r.filter.divisibility_survivors},
          {"survivors", r.filter.survivors}}},
        {"verdict", r.verdict()},
        {"assumed_facts", r.assumed_facts},
    };
  }

  nlohmann::json graph_summary(GroupId const& g) {
    Factorization const order = order_of(g);
    Spectrum const      sp    = spectrum_of(g);
    PrimeGraph const    graph = build_gk(order, sp.mu);
    auto const          comps = components(graph, order);
    nlohmann::json      j     = graph;
    j["group"]      = g;
    j["order"]      = order.to_string();
    j["spectrum"]   = sp;
    j["degrees"]    = degree_pattern(graph).degrees;
    j["components"] = comps;
    j["s"]          = comps.s();
    j["t"]          = independence(graph);
    if (graph.contains(2)) {
      j["t2"] = independence_at(graph, 2);
    }
    auto suzuki = suzuki_decomposition(graph);
    j["suzuki"] = {{"holds", suzuki.holds}, {"clique_sizes", suzuki.clique_sizes}};
    return j;
  }

}  // namespace gk
