#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "gk/catalog.hpp"
#include "gk/json.hpp"
#include "gk/verifier.hpp"

using namespace gk;

namespace {
  PrimeGraph gk_of(GroupId const& g) {
    return build_gk(order_of(g), spectrum_of(g).mu);
  }

  // Count labelled graphs on k vertices with the given degrees by splitting
  // the edge set in two halves and adding packed degree vectors (4 bits
  // per vertex).
  std::uint64_t count_by_halves(std::vector<unsigned> const& degrees) {
    std::size_t const                       k = degrees.size();
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = i + 1; j < k; ++j) {
        edges.emplace_back(i, j);
      }
    }
    std::size_t const half = edges.size() / 2;
    auto packed = [&](std::size_t from, std::size_t to) {
      std::vector<std::uint32_t> out(std::size_t{1} << (to - from), 0);
      for (std::size_t m = 0; m < out.size(); ++m) {
        std::uint32_t v = 0;
        for (std::size_t e = from; e < to; ++e) {
          if (m >> (e - from) & 1) {
            v += 1u << (4 * edges[e].first);
            v += 1u << (4 * edges[e].second);
          }
        }
        out[m] = v;
      }
      return out;
    };
    auto lo = packed(0, half), hi = packed(half, edges.size());
    std::uint32_t target = 0;
    for (std::size_t i = 0; i < k; ++i) {
      target += degrees[i] << (4 * i);
    }
    std::map<std::uint32_t, std::uint64_t> hi_count;
    for (auto v : hi) {
      ++hi_count[v];
    }
    std::uint64_t total = 0;
    for (auto v : lo) {
      // Packed addition never carries: degrees stay below 16.
      if (v > target) {
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < k; ++i) {
        ok = ok && ((v >> (4 * i)) & 15) <= degrees[i];
      }
      if (!ok) {
        continue;
      }
      auto it = hi_count.find(target - v);
      if (it != hi_count.end()) {
        total += it->second;
      }
    }
    return total;
  }
}  // namespace

TEST_CASE("enumerate_with_pattern examples") {
  auto single = enumerate_with_pattern({19, 37}, {1, 1});
  REQUIRE(single.graphs.size() == 1);
  CHECK(single.graphs[0].edges() == std::vector<Edge>{{19, 37}});

  GroupId const s4  = GroupId::parse("S4(31)");
  auto          fam = enumerate_with_pattern({2, 3, 5, 13, 31, 37}, {3, 3, 3, 1, 3, 1});
  CHECK(fam.graphs.size() == 13);
  std::size_t with_pivot = 0;
  for (auto const& g : fam.graphs) {
    if (g.adjacent(13, 37)) {
      ++with_pivot;
      CHECK(g == gk_of(s4));
    }
  }
  CHECK(with_pivot == 1);

  auto u3 = enumerate_with_pattern({2, 3, 7, 13, 19, 37}, {3, 2, 3, 2, 1, 1});
  std::vector<PrimeGraph> pivots;
  for (auto const& g : u3.graphs) {
    if (g.adjacent(19, 37)) {
      pivots.push_back(g);
    }
  }
  REQUIRE(pivots.size() == 1);
  CHECK(pivots[0] == gk_of(GroupId::parse("U3(27)")));
}

TEST_CASE("enumerate_with_pattern errors and infeasible input") {
  auto odd = enumerate_with_pattern({2, 3, 5}, {1, 1, 1});
  CHECK(odd.infeasible);
  CHECK(odd.graphs.empty());
  CHECK_THROWS_AS(enumerate_with_pattern({2, 3}, {1}), DomainError);
  CHECK_THROWS_AS(enumerate_with_pattern({3, 2}, {1, 1}), DomainError);
  std::vector<Prime> eleven = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  CHECK_THROWS_AS(enumerate_with_pattern(eleven, std::vector<unsigned>(11, 0)),
                  BoundsError);
  // Even sum but not graphical.
  CHECK(enumerate_with_pattern({2, 3, 5}, {2, 2, 0}).graphs.empty());
}

TEST_CASE("families of the four groups: membership, pattern and counts") {
  for (auto const& c : case_table()) {
    CAPTURE(c.group.to_string());
    PrimeGraph const gk  = gk_of(c.group);
    auto const       d   = degree_pattern(gk);
    auto const       fam = enumerate_with_pattern(d.primes, d.degrees);
    CHECK(std::find(fam.graphs.begin(), fam.graphs.end(), gk) != fam.graphs.end());
    std::set<std::vector<Edge>> distinct;
    for (auto const& g : fam.graphs) {
      CHECK(degree_pattern(g) == d);
      distinct.insert(g.edges());
    }
    CHECK(distinct.size() == fam.graphs.size());
    CHECK(fam.graphs.size() == count_by_halves(d.degrees));
  }
}

TEST_CASE("U4(31) family satisfies the Vasil'ev hypotheses throughout") {
  auto const d   = degree_pattern(gk_of(GroupId::parse("U4(31)")));
  auto const fam = enumerate_with_pattern(d.primes, d.degrees);
  CHECK(fam.graphs.size() == 921);
  for (auto const& g : fam.graphs) {
    auto c = vasiliev_applicable(g);
    CHECK(c.t.size >= 3);
    CHECK(c.t2.size >= 2);
  }
}

TEST_CASE("vasiliev_applicable") {
  auto u4 = vasiliev_applicable(gk_of(GroupId::parse("U4(31)")));
  CHECK(u4.applicable);
  CHECK(u4.t.witness == std::vector<Prime>{7, 13, 31});
  CHECK(u4.t2.witness == std::vector<Prime>{2, 13});
  CHECK_FALSE(vasiliev_applicable(PrimeGraph({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}})).applicable);
  CHECK_THROWS_AS(vasiliev_applicable(PrimeGraph({3, 5, 7}, {})), ScopeError);
  auto fam = enumerate_with_pattern({2, 3, 5, 13, 31, 37}, {3, 3, 3, 1, 3, 1});
  for (auto const& g : fam.graphs) {
    if (!g.adjacent(13, 37)) {
      CHECK(vasiliev_applicable(g).applicable);
    }
  }
}

TEST_CASE("candidate_filter examples") {
  auto const s37 = enumerate_S_p(37).groups;
  auto one = [](char const* s) { return std::vector<GroupId>{GroupId::parse(s)}; };
  CHECK(candidate_filter(Factorization{{7, 2}, {13, 1}, {19, 1}, {37, 1}},
                         order_of(GroupId::parse("U3(27)")), s37)
        == one("U3(27)"));
  CHECK(candidate_filter(Factorization{{7, 2}, {19, 1}, {37, 1}},
                         order_of(GroupId::parse("U4(31)")), s37)
        == one("U4(31)"));
  CHECK(candidate_filter(Factorization{{37, 1}}, order_of(GroupId::parse("L2(37)")), s37)
        == one("L2(37)"));
  // Divisibility alone keeps L2(11^3) next to G2(11); the degree bound
  // removes it (37 has degree 2 there but 1 in GK(G2(11))).
  GroupId const g2    = GroupId::parse("G2(11)");
  auto const    m     = Factorization{{7, 1}, {19, 1}, {37, 1}};
  auto const    bound = degree_pattern(gk_of(g2));
  CHECK(candidate_filter(m, order_of(g2), s37)
        == std::vector<GroupId>{GroupId::parse("L2(11^3)"), g2});
  CHECK(candidate_filter(m, order_of(g2), s37, &bound) == one("G2(11)"));
  CHECK(gk_of(GroupId::parse("L2(11^3)")).degree(37) == 2);
}

TEST_CASE("verify_case on the four groups") {
  for (auto const& c : case_table()) {
    CAPTURE(c.group.to_string());
    CaseReport r = verify_case(c.group);
    CHECK(r.verdict() == "verified");
    CHECK(r.filter.survivors == std::vector<GroupId>{c.group});
    CHECK(r.alternatives.all_vasiliev_applicable);
    CHECK_FALSE(r.assumed_facts.empty());
  }
  CaseReport s4 = verify_case(GroupId::parse("S4(31)"));
  CHECK(s4.family_size == 13);
  CHECK(s4.forced.members_with_pivot == 1);
  CHECK(s4.forced.equals_gk);
  CHECK(s4.alternatives.count == 12);
  CaseReport u3 = verify_case(GroupId::parse("U3(27)"));
  CHECK(u3.forced.forced);
  auto comps = connected_components(gk_of(GroupId::parse("U3(27)")));
  CHECK(std::find(comps.begin(), comps.end(), std::vector<Prime>{19, 37}) != comps.end());
  CaseReport u4 = verify_case(GroupId::parse("U4(31)"));
  CHECK_FALSE(u4.forced.pivot);
  CHECK(u4.alternatives.count == u4.family_size);
}

TEST_CASE("tampered pattern fails at enumeration") {
  CaseReport r = verify_case(GroupId::parse("U3(27)"), std::vector<unsigned>{3, 2, 3, 2, 1, 0});
  CHECK(r.verdict() == "failed(enumeration)");
  CHECK_FALSE(r.verified());
  // Even sum but GK(S) not a member.
  CaseReport s = verify_case(GroupId::parse("U3(27)"), std::vector<unsigned>{3, 2, 3, 2, 2, 2});
  CHECK(s.verdict() == "failed(enumeration)");
}

TEST_CASE("a wrong divisor fails at the filter") {
  auto c       = *find_case(GroupId::parse("U3(27)"));
  c.m_required = Factorization{{37, 1}};
  CHECK(verify_case(c).verdict() == "failed(filter)");
}

TEST_CASE("verify_case is deterministic") {
  for (auto const& c : case_table()) {
    CHECK(nlohmann::json(verify_case(c)).dump() == nlohmann::json(verify_case(c)).dump());
  }
  CHECK_THROWS_AS(verify_case(GroupId::parse("L2(37)")), DomainError);
}
