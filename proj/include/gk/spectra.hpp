// Maximal element orders mu(S) of simple groups: closed forms for the
// families L2, U3, U4, S4, G2 and cycle-type enumeration for A_n.

#ifndef GK_SPECTRA_HPP_
#define GK_SPECTRA_HPP_

#include <cstdint>
#include <string_view>

#include "gk/arith.hpp"
#include "gk/group_id.hpp"

namespace gk {

  enum class SpectrumSource { Formula, Partition, Oracle };

  std::string_view to_string(SpectrumSource s);

  struct Spectrum {
    NatSet         mu;  // antichain under divisibility, ascending
    SpectrumSource source = SpectrumSource::Formula;

    bool operator==(Spectrum const&) const = default;
  };

  // The field size argument of every formula below is q = p^k.

  // p odd, p != 3.
  Spectrum mu_S4(std::uint64_t p, unsigned k = 1);
  // p odd.
  Spectrum mu_U3(std::uint64_t p, unsigned k = 1);
  // p > 5.
  Spectrum mu_G2(std::uint64_t p, unsigned k = 1);
  // p odd.
  Spectrum mu_U4(std::uint64_t p, unsigned k = 1);
  // q >= 4.
  Spectrum mu_L2(std::uint64_t p, unsigned k = 1);

  // 5 <= n <= 100.
  Spectrum mu_alternating(unsigned n);
  // Full spectrum omega(A_n): every lcm of a partition of n with an even
  // number of even parts.
  NatSet omega_alternating(unsigned n);

  // Dispatch on the family; NotImplementedError names unsupported ones.
  Spectrum spectrum_of(GroupId const& g);

  // True if spectrum_of(g) has a formula for g's family (parameters may
  // still be rejected).
  bool has_spectrum_formula(Family f);
  // True iff spectrum_of(g) succeeds for this particular group.
  bool has_spectrum_formula(GroupId const& g);

  // True iff no element of mu properly divides another.
  bool is_antichain(NatSet const& mu);

  // Union of the prime supports of the members of mu; equals
  // prime_support of divisor_closure(mu) without materializing it.
  std::vector<std::uint64_t> spectrum_primes(NatSet const& mu);

}  // namespace gk

#endif  // GK_SPECTRA_HPP_
