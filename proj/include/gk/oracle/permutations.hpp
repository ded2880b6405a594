// Element orders of A_n by listing every even permutation.

#ifndef GK_ORACLE_PERMUTATIONS_HPP_
#define GK_ORACLE_PERMUTATIONS_HPP_

#include "gk/arith.hpp"
#include "gk/spectra.hpp"

namespace gk::oracle {

  // omega(A_n) for 5 <= n <= 10; BoundsError otherwise.
  NatSet alternating_omega_bruteforce(unsigned n);

  // mu(A_n), the maximal elements of the set above.
  Spectrum alternating_spectrum_bruteforce(unsigned n);

  // Cycle-type order (lcm of cycle lengths) of a permutation of 0..n-1.
  std::uint64_t permutation_order(std::vector<unsigned> const& perm);

}  // namespace gk::oracle

#endif  // GK_ORACLE_PERMUTATIONS_HPP_
