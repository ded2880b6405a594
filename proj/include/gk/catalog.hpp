// Orders of finite simple groups and enumeration of the sets S_p of simple
// groups whose order has largest prime divisor p.

#ifndef GK_CATALOG_HPP_
#define GK_CATALOG_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gk/arith.hpp"
#include "gk/group_id.hpp"

namespace gk {

  // Bounds for the S_p search. Characteristics are primes <= max_prime,
  // fields are p^k with k <= max_field_exponent, Lie rank <= max_rank and
  // alternating degree <= max_alt_degree.
  struct SearchCaps {
    unsigned max_prime          = 37;
    unsigned max_field_exponent = 20;
    unsigned max_rank           = 20;
    unsigned max_alt_degree     = 100;

    void validate() const;

    // "key = value" lines; unknown keys and non-positive values are
    // rejected. Keys not mentioned keep their defaults.
    static SearchCaps parse(std::string_view text);
    std::string       to_text() const;

    bool operator==(SearchCaps const&) const = default;
  };

  // Exact factorization of |g|. Trial division runs up to kMaxPrimeBound;
  // anything left over stays in the residual.
  Factorization order_of(GroupId const& g);

  // As order_of, but factoring only with primes <= prime_bound and
  // stopping at the first non-smooth factor. Returns a complete
  // factorization iff |g| is prime_bound-smooth.
  Factorization order_of(GroupId const& g, std::uint64_t prime_bound);

  Factorization            sporadic_order(std::string_view name);
  bool                     is_sporadic_name(std::string_view name);
  std::vector<std::string> sporadic_names();

  // Parsed form of the embedded coincidence table.
  struct Coincidence {
    GroupId alias;
    GroupId canonical;
  };
  std::vector<Coincidence> const& coincidences();

  // The one identifier enumeration emits for the abstract group g.
  GroupId canonical(GroupId const& g);

  struct Enumeration {
    std::uint64_t        p;
    SearchCaps           caps;
    std::vector<GroupId> groups;  // canonical, sorted, distinct
  };

  // All groups within caps whose order is p-smooth and divisible by p.
  Enumeration enumerate_S_p(std::uint64_t p, SearchCaps const& caps = {});

  // The 13 groups known to make up S_37.
  std::vector<GroupId> reference_S37();

  // pi(Out(g)) is contained in {2, 3, 5} for every simple g whose largest
  // order prime lies in [5, 97]. Encoded as a fact over the alternating
  // and Lie-type families; sporadic groups and groups outside that prime
  // window raise ScopeError.
  bool out_primes_bounded(GroupId const& g);

  // Raw text of the embedded tables (one `name|value` record per line).
  std::string_view sporadic_order_table();
  std::string_view coincidence_table();

}  // namespace gk

#endif  // GK_CATALOG_HPP_
