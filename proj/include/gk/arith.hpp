// Natural-number arithmetic: bounded trial-division factorization and the
// divisibility-lattice helpers used for spectra.

#ifndef GK_ARITH_HPP_
#define GK_ARITH_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gk/error.hpp"

namespace gk {

  using Nat = boost::multiprecision::cpp_int;

  // Sorted ascending, no duplicates.
  using NatSet = std::vector<Nat>;

  inline constexpr std::uint64_t kDefaultPrimeBound = 37;
  inline constexpr std::uint64_t kMaxPrimeBound     = 10000;

  struct PrimePower {
    std::uint64_t prime;
    unsigned      exponent;

    bool operator==(PrimePower const&) const = default;
  };

  // Thrown by prime_support when the input has a prime factor above the
  // bound. The unfactored part is kept for diagnostics.
  class NonSmoothError : public DomainError {
   public:
    NonSmoothError(std::string const& what, Nat residual)
        : DomainError(what), _residual(std::move(residual)) {}

    Nat const& residual() const noexcept {
      return _residual;
    }

   private:
    Nat _residual;
  };

  // n = (product of prime powers) * residual, where the residual has no
  // prime factor at or below the bound the factorization was made with.
  class Factorization {
   public:
    Factorization() = default;  // the number 1
    explicit Factorization(std::vector<PrimePower> factors, Nat residual = 1);
    Factorization(std::initializer_list<std::pair<std::uint64_t, unsigned>>);

    std::vector<PrimePower> const& factors() const noexcept {
      return _factors;
    }
    Nat const& residual() const noexcept {
      return _residual;
    }
    bool complete() const noexcept {
      return _residual == 1;
    }

    Nat                        value() const;
    unsigned                   exponent(std::uint64_t p) const;
    std::vector<std::uint64_t> primes() const;
    std::uint64_t              largest_prime() const;  // 0 for the number 1

    // Divisibility on exact values; correct whenever both factorizations
    // were made with the same bound.
    bool divides(Factorization const& other) const;

    Factorization operator*(Factorization const& other) const;
    // Exact division by a complete factorization; DomainError otherwise.
    Factorization operator/(Factorization const& divisor) const;

    // "2^5*3^9*7^2*13", "1" for the empty product; a non-unit residual is
    // appended as "*{residual}".
    std::string          to_string() const;
    static Factorization parse(std::string_view text);

    bool operator==(Factorization const&) const = default;

   private:
    std::vector<PrimePower> _factors;
    Nat                     _residual = 1;
  };

  // Ascending primes <= bound. bound <= kMaxPrimeBound.
  std::span<std::uint64_t const> primes_up_to(std::uint64_t bound);

  bool          is_prime_u64(std::uint64_t n);
  std::uint64_t next_prime_after(std::uint64_t n);

  Factorization factorize(Nat const&    n,
                          std::uint64_t prime_bound = kDefaultPrimeBound);
  bool is_smooth(Nat const& n, std::uint64_t prime_bound = kDefaultPrimeBound);

  // Sorted distinct primes dividing n; NonSmoothError if n is not
  // prime_bound-smooth.
  std::vector<std::uint64_t>
  prime_support(Nat const& n, std::uint64_t prime_bound = kDefaultPrimeBound);

  // Complete factorization for values whose cofactor after trial division
  // up to kMaxPrimeBound is 1 or a prime below 2^64. DomainError otherwise.
  Factorization full_factorization(Nat const& n);

  NatSet maximal_under_divisibility(std::vector<Nat> values);
  NatSet divisor_closure(NatSet const& mu);

  NatSet make_nat_set(std::initializer_list<std::uint64_t> values);

  std::string   to_string(Nat const& n);
  std::uint64_t to_u64(Nat const& n);  // BoundsError if it does not fit
  Nat           pow(Nat const& base, unsigned exponent);

}  // namespace gk

#endif  // GK_ARITH_HPP_
