#include "gk/oracle/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gk/error.hpp"

namespace gk::oracle {

  std::uint64_t permutation_order(std::vector<unsigned> const& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::uint64_t     order = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      order = std::lcm(order, len);
    }
    return order;
  }

  namespace {
    // Parity via the number of inversions.
    bool is_even(std::vector<unsigned> const& perm) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
          inversions += perm[i] > perm[j];
        }
      }
      return inversions % 2 == 0;
    }
  }  // namespace

  NatSet alternating_omega_bruteforce(unsigned n) {
    if (n < 5 || n > 10) {
      throw BoundsError("alternating_omega_bruteforce: n must lie in [5, 10]");
    }
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::set<std::uint64_t> orders;
    do {
      if (is_even(perm)) {
        orders.insert(permutation_order(perm));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return NatSet(orders.begin(), orders.end());
  }

  Spectrum alternating_spectrum_bruteforce(unsigned n) {
    return {maximal_under_divisibility(alternating_omega_bruteforce(n)),
            SpectrumSource::Oracle};
  }

}  // namespace gk::oracle
