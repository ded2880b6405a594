#include "gk/verifier.hpp"

#include <algorithm>
#include <numeric>

#include "gk/catalog.hpp"
#include "gk/error.hpp"
#include "gk/spectra.hpp"

namespace gk {

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct PatternSearch {
      std::vector<Prime> const&  primes;
      std::vector<std::size_t>   order;  // processing order of vertex indices
      std::vector<unsigned>      remaining;
      std::vector<std::uint64_t> adj;
      std::vector<PrimeGraph>    out;

      void run(std::size_t pos) {
        if (pos == order.size()) {
          out.push_back(PrimeGraph::from_masks(primes, adj));
          return;
        }
        std::size_t const v = order[pos];
        // Partners are the not-yet-processed vertices with capacity left,
        // in ascending prime order.
        std::vector<std::size_t> partners;
        for (std::size_t i = pos + 1; i < order.size(); ++i) {
          if (remaining[order[i]] > 0) {
            partners.push_back(order[i]);
          }
        }
        std::sort(partners.begin(), partners.end());
        unsigned const need = remaining[v];
        if (need > partners.size()) {
          return;
        }
        remaining[v] = 0;
        std::vector<std::size_t> chosen;
        choose(pos, v, partners, 0, need, chosen);
        remaining[v] = need;
      }

      void choose(std::size_t                     pos,
                  std::size_t                     v,
                  std::vector<std::size_t> const& partners,
                  std::size_t                     from,
                  unsigned                        left,
                  std::vector<std::size_t>&       chosen) {
        if (left == 0) {
          for (auto w : chosen) {
            adj[v] |= std::uint64_t{1} << w;
            adj[w] |= std::uint64_t{1} << v;
            --remaining[w];
          }
          run(pos + 1);
          for (auto w : chosen) {
            adj[v] &= ~(std::uint64_t{1} << w);
            adj[w] &= ~(std::uint64_t{1} << v);
            ++remaining[w];
          }
          return;
        }
        for (std::size_t i = from; i + left <= partners.size(); ++i) {
          chosen.push_back(partners[i]);
          choose(pos, v, partners, i + 1, left - 1, chosen);
          chosen.pop_back();
        }
      }
    };
  }  // namespace

  GraphFamily enumerate_with_pattern(std::vector<Prime> const&    primes,
                                     std::vector<unsigned> const& degrees) {
    if (primes.size() != degrees.size()) {
      throw DomainError("enumerate_with_pattern: " + std::to_string(primes.size())
                        + " primes but " + std::to_string(degrees.size())
                        + " degrees");
    }
    if (primes.size() > kMaxFamilyVertices) {
      throw BoundsError("enumerate_with_pattern: at most 10 vertices");
    }
    if (!std::is_sorted(primes.begin(), primes.end())
        || std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
      throw DomainError("enumerate_with_pattern: primes must be strictly increasing");
    }
    GraphFamily family{primes, {primes, degrees}, {}, false};
    unsigned    sum = std::accumulate(degrees.begin(), degrees.end(), 0u);
    if (sum % 2 != 0) {
      family.infeasible = true;
      return family;
    }
    PatternSearch search{primes, {}, degrees, std::vector<std::uint64_t>(primes.size(), 0), {}};
    search.order.resize(primes.size());
    std::iota(search.order.begin(), search.order.end(), std::size_t{0});
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](auto a, auto b) { return degrees[a] > degrees[b]; });
    search.run(0);
    family.graphs = std::move(search.out);
    return family;
  }

  ////////////////////////////////////////////////////////////////////////
  // Per-graph checks and the catalog filter
  ////////////////////////////////////////////////////////////////////////

  VasilievCheck vasiliev_applicable(PrimeGraph const& g) {
    if (!g.contains(2)) {
      throw ScopeError("vasiliev_applicable: 2 is not a vertex");
    }
    VasilievCheck c;
    c.t          = independence(g);
    c.t2         = independence_at(g, 2);
    c.applicable = c.t.size >= 3 && c.t2.size >= 2;
    return c;
  }

  namespace {
    bool within_degree_bound(GroupId const& p, Factorization const& order,
                             DegreePattern const& bound) {
      if (!has_spectrum_formula(p)) {
        return true;
      }
      PrimeGraph const gp = build_gk(order, spectrum_of(p).mu);
      for (Prime r : gp.vertices()) {
        auto it = std::lower_bound(bound.primes.begin(), bound.primes.end(), r);
        if (it == bound.primes.end() || *it != r) {
          return false;
        }
        if (gp.degree(r) > bound.degrees[it - bound.primes.begin()]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::vector<GroupId> candidate_filter(Factorization const&        m,
                                        Factorization const&        g_order,
                                        std::vector<GroupId> const& catalog,
                                        DegreePattern const*        degree_bound) {
    std::vector<GroupId> out;
    for (auto const& p : catalog) {
      Factorization const order = order_of(p);
      if (!m.divides(order) || !order.divides(g_order)) {
        continue;
      }
      if (degree_bound != nullptr && !within_degree_bound(p, order, *degree_bound)) {
        continue;
      }
      out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Case table
  ////////////////////////////////////////////////////////////////////////

  std::vector<CaseConfig> const& case_table() {
    static std::vector<CaseConfig> const table = {
        {GroupId::lie(Family::Symplectic, 4, 31, 1),
         Edge{13, 37},
         Factorization{{13, 1}, {31, 4}, {37, 1}},
         "13~37 forces GK(S); otherwise the section P has order divisible by "
         "13*31^4*37"},
        {GroupId::lie(Family::Unitary, 3, 3, 3),
         Edge{19, 37},
         Factorization{{7, 2}, {13, 1}, {19, 1}, {37, 1}},
         "19~37 forces GK(S); otherwise |P| is divisible by 7^2*13*19*37"},
        {GroupId::exceptional(Family::G2, 11),
         Edge{7, 19},
         Factorization{{7, 1}, {19, 1}, {37, 1}},
         "7~19 forces GK(S); otherwise K is a {7,19,37}'-group, read as "
         "7*19*37 dividing |P|"},
        {GroupId::lie(Family::Unitary, 4, 31, 1),
         std::nullopt,
         Factorization{{7, 2}, {19, 1}, {37, 1}},
         "both 7~19 and its absence give t >= 3; |P| divisible by 7^2*19*37"},
    };
    return table;
  }

  std::optional<CaseConfig> find_case(GroupId const& g) {
    for (auto const& c : case_table()) {
      if (c.group == g) {
        return c;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pipeline
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(FailedStep s) {
    switch (s) {
      case FailedStep::None:
        return "none";
      case FailedStep::Enumeration:
        return "enumeration";
      case FailedStep::Forced:
        return "forced";
      case FailedStep::Alternatives:
        return "alternatives";
      case FailedStep::Filter:
        return "filter";
    }
    return "unknown";
  }

  std::string CaseReport::verdict() const {
    if (verified()) {
      return "verified";
    }
    return "failed(" + std::string(to_string(failed)) + ")";
  }

  namespace {
    std::vector<std::string> assumed_facts_for(CaseConfig const& c) {
      std::vector<std::string> facts = {
          "order components characterize S: a finite group with the same order "
          "components as " + c.group.to_string() + " is isomorphic to it",
          "Vasil'ev: if t(G) >= 3 and t(2,G) >= 2 then for the solvable radical "
          "K there is a nonabelian simple P with P <= G/K <= Aut(P)",
          "pi(Out(P)) is contained in {2,3,5} for every simple P whose largest "
          "order prime is 37",
          "solvable radical reasoning: K is a pi'-group for the primes of m "
          "(Frattini argument), so m divides |P|",
          "classification: the simple groups with largest order prime 37 are "
          "exactly the enumerated catalog",
      };
      return facts;
    }
  }  // namespace

  CaseReport verify_case(GroupId const&                       g,
                         std::optional<std::vector<unsigned>> pattern_override) {
    auto config = find_case(g);
    if (!config) {
      throw DomainError("verify_case: no case configured for " + g.to_string());
    }
    return verify_case(*config, std::move(pattern_override));
  }

  CaseReport verify_case(CaseConfig const&                    config,
                         std::optional<std::vector<unsigned>> pattern_override) {
    CaseReport report;
    report.group         = config.group;
    report.assumed_facts = assumed_facts_for(config);
    report.forced.pivot  = config.pivot;
    report.filter.m      = config.m_required;

    Factorization const order = order_of(config.group);
    Spectrum const      sp    = spectrum_of(config.group);
    PrimeGraph const    gk_s  = build_gk(order, sp.mu);
    DegreePattern const d     = degree_pattern(gk_s);
    report.pattern            = d;
    if (pattern_override) {
      report.pattern.degrees = *pattern_override;
    }

    // Enumeration: GK(S) must be one of the graphs with the pattern.
    GraphFamily family = enumerate_with_pattern(report.pattern.primes,
                                                report.pattern.degrees);
    report.family_size  = family.graphs.size();
    report.gk_in_family = std::find(family.graphs.begin(), family.graphs.end(), gk_s)
                          != family.graphs.end();
    if (family.infeasible || !report.gk_in_family) {
      report.failed = FailedStep::Enumeration;
      return report;
    }

    // Pivot branch.
    std::vector<PrimeGraph const*> rest;
    bool                           all_equal = true;
    for (auto const& member : family.graphs) {
      if (config.pivot && member.adjacent(config.pivot->first, config.pivot->second)) {
        ++report.forced.members_with_pivot;
        all_equal = all_equal && member == gk_s;
      } else {
        rest.push_back(&member);
      }
    }
    if (config.pivot) {
      report.forced.equals_gk = report.forced.members_with_pivot > 0 && all_equal;
      report.forced.forced    = report.forced.equals_gk;
      if (!report.forced.forced) {
        report.failed = FailedStep::Forced;
        return report;
      }
    }

    // Remaining branch.
    report.alternatives.count                   = rest.size();
    report.alternatives.all_vasiliev_applicable = true;
    for (auto const* member : rest) {
      report.alternatives.witnesses.push_back(vasiliev_applicable(*member));
      report.alternatives.all_vasiliev_applicable
          = report.alternatives.all_vasiliev_applicable
            && report.alternatives.witnesses.back().applicable;
    }
    if (!report.alternatives.all_vasiliev_applicable) {
      report.failed = FailedStep::Alternatives;
      return report;
    }

    // Catalog filter.
    auto const catalog = enumerate_S_p(order.largest_prime()).groups;
    report.filter.divisibility_survivors
        = candidate_filter(config.m_required, order, catalog);
    report.filter.survivors = candidate_filter(config.m_required, order, catalog, &d);
    if (report.filter.survivors != std::vector<GroupId>{config.group}) {
      report.failed = FailedStep::Filter;
    }
    return report;
  }

}  // namespace gk
