// Mechanical checks behind the OD-characterization of S4(31), U3(27),
// G2(11) and U4(31): enumerate every labelled graph with the group's degree
// pattern, confirm the pivot-edge branch forces GK(S), confirm the other
// branch satisfies Vasil'ev's independence hypotheses, and filter the
// catalog by order divisibility.

#ifndef GK_VERIFIER_HPP_
#define GK_VERIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gk/arith.hpp"
#include "gk/group_id.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

  inline constexpr std::size_t kMaxFamilyVertices = 10;

  struct GraphFamily {
    std::vector<Prime>      primes;
    DegreePattern           pattern;
    std::vector<PrimeGraph> graphs;
    // Set when the degree sum is odd; graphs is then empty.
    bool infeasible = false;
  };

  // Every labelled simple graph on `primes` in which primes[i] has degree
  // degrees[i]. Vertices are filled in order of descending requested
  // degree, partners chosen lexicographically. BoundsError for more than
  // 10 vertices, DomainError on a length mismatch or unsorted primes.
  GraphFamily enumerate_with_pattern(std::vector<Prime> const&    primes,
                                     std::vector<unsigned> const& degrees);

  struct VasilievCheck {
    bool           applicable = false;
    IndependentSet t;    // maximum independent set
    IndependentSet t2;   // maximum independent set through 2
  };

  // t(g) >= 3 and t(2, g) >= 2. ScopeError if 2 is not a vertex.
  VasilievCheck vasiliev_applicable(PrimeGraph const& g);

  // Simple groups P with m | |P| and |P| | g_order, sorted. When a degree
  // bound is given, P is also dropped if some prime r of |P| has a larger
  // degree in GK(P) than bound assigns to r: a section's prime graph is a
  // subgraph of the whole group's. Candidates without a spectrum formula
  // are kept by that test.
  std::vector<GroupId> candidate_filter(Factorization const&        m,
                                        Factorization const&        g_order,
                                        std::vector<GroupId> const& catalog,
                                        DegreePattern const* degree_bound = nullptr);

  struct CaseConfig {
    GroupId             group;
    std::optional<Edge> pivot;  // none: both branches go to Vasil'ev
    Factorization       m_required;
    std::string         note;
  };

  // The four configured cases, in a fixed order.
  std::vector<CaseConfig> const& case_table();
  std::optional<CaseConfig>      find_case(GroupId const& g);

  struct ForcedBranch {
    std::optional<Edge> pivot;
    std::size_t         members_with_pivot = 0;
    bool                forced     = false;  // at least one such member, all equal GK(S)
    bool                equals_gk  = false;
  };

  struct AlternativeBranch {
    std::size_t                count = 0;
    bool                       all_vasiliev_applicable = false;
    std::vector<VasilievCheck> witnesses;
  };

  struct FilterBranch {
    Factorization        m;
    std::vector<GroupId> divisibility_survivors;
    std::vector<GroupId> survivors;  // after the degree bound
  };

  enum class FailedStep { None, Enumeration, Forced, Alternatives, Filter };
  std::string_view to_string(FailedStep s);

  struct CaseReport {
    GroupId                  group;
    DegreePattern            pattern;
    std::size_t              family_size = 0;
    bool                     gk_in_family = false;
    ForcedBranch             forced;
    AlternativeBranch        alternatives;
    FilterBranch             filter;
    FailedStep               failed = FailedStep::None;
    std::vector<std::string> assumed_facts;

    bool verified() const noexcept {
      return failed == FailedStep::None;
    }
    // "verified" or "failed(<step>)"
    std::string verdict() const;
  };

  // Runs the whole pipeline for one configured group. pattern_override
  // replaces D(S) in the enumeration step (negative controls).
  // NotImplementedError without a spectrum formula, DomainError if g is
  // not in the case table.
  CaseReport verify_case(GroupId const& g,
                         std::optional<std::vector<unsigned>> pattern_override = {});
  CaseReport verify_case(CaseConfig const&                    config,
                         std::optional<std::vector<unsigned>> pattern_override = {});

}  // namespace gk

#endif  // GK_VERIFIER_HPP_
