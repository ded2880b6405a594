#include "gk/arith.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

namespace gk {

  namespace {

    std::vector<std::uint64_t> const& sieve() {
      static std::vector<std::uint64_t> const primes = [] {
        std::vector<bool>          composite(kMaxPrimeBound + 1, false);
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 2; i <= kMaxPrimeBound; ++i) {
          if (composite[i]) {
            continue;
          }
          out.push_back(i);
          for (std::uint64_t j = i * i; j <= kMaxPrimeBound; j += i) {
            composite[j] = true;
          }
        }
        return out;
      }();
      return primes;
    }

    using u128 = unsigned __int128;

    std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
      return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
    }

    std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
      std::uint64_t r = 1 % m;
      b %= m;
      while (e != 0) {
        if (e & 1) {
          r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
      }
      return r;
    }

    void check_canonical(std::vector<PrimePower> const& factors) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].exponent == 0) {
          throw DomainError("Factorization: zero exponent");
        }
        if (!is_prime_u64(factors[i].prime)) {
          throw DomainError("Factorization: " + std::to_string(factors[i].prime)
                            + " is not prime");
        }
        if (i > 0 && factors[i - 1].prime >= factors[i].prime) {
          throw DomainError("Factorization: primes not strictly increasing");
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Factorization
  ////////////////////////////////////////////////////////////////////////

  Factorization::Factorization(std::vector<PrimePower> factors, Nat residual)
      : _factors(std::move(factors)), _residual(std::move(residual)) {
    check_canonical(_factors);
    if (_residual < 1) {
      throw DomainError("Factorization: residual must be positive");
    }
  }

  Factorization::Factorization(
      std::initializer_list<std::pair<std::uint64_t, unsigned>> pairs) {
    for (auto [p, e] : pairs) {
      _factors.push_back({p, e});
    }
    check_canonical(_factors);
  }

  Nat Factorization::value() const {
    Nat v = _residual;
    for (auto const& f : _factors) {
      v *= gk::pow(Nat(f.prime), f.exponent);
    }
    return v;
  }

  unsigned Factorization::exponent(std::uint64_t p) const {
    auto it = std::lower_bound(
        _factors.begin(), _factors.end(), p, [](PrimePower const& f, auto q) {
          return f.prime < q;
        });
    return (it != _factors.end() && it->prime == p) ? it->exponent : 0;
  }

  std::vector<std::uint64_t> Factorization::primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(_factors.size());
    for (auto const& f : _factors) {
      out.push_back(f.prime);
    }
    return out;
  }

  std::uint64_t Factorization::largest_prime() const {
    return _factors.empty() ? 0 : _factors.back().prime;
  }

  bool Factorization::divides(Factorization const& other) const {
    for (auto const& f : _factors) {
      if (other.exponent(f.prime) < f.exponent) {
        return false;
      }
    }
    return other._residual % _residual == 0;
  }

  Factorization Factorization::operator*(Factorization const& other) const {
    std::map<std::uint64_t, unsigned> merged;
    for (auto const& f : _factors) {
      merged[f.prime] += f.exponent;
    }
    for (auto const& f : other._factors) {
      merged[f.prime] += f.exponent;
    }
    Factorization out;
    for (auto [p, e] : merged) {
      out._factors.push_back({p, e});
    }
    out._residual = _residual * other._residual;
    return out;
  }

  Factorization Factorization::operator/(Factorization const& divisor) const {
    if (!divisor.complete()) {
      throw DomainError("Factorization: divisor must be completely factored");
    }
    Factorization out;
    out._residual = _residual;
    for (auto const& f : _factors) {
      unsigned d = divisor.exponent(f.prime);
      if (d > f.exponent) {
        throw DomainError("Factorization: inexact division");
      }
      if (f.exponent > d) {
        out._factors.push_back({f.prime, f.exponent - d});
      }
    }
    for (auto const& f : divisor._factors) {
      if (exponent(f.prime) == 0) {
        throw DomainError("Factorization: inexact division");
      }
    }
    return out;
  }

  std::string Factorization::to_string() const {
    std::ostringstream os;
    bool               first = true;
    for (auto const& f : _factors) {
      os << (first ? "" : "*") << f.prime;
      if (f.exponent > 1) {
        os << '^' << f.exponent;
      }
      first = false;
    }
    if (_residual != 1) {
      os << (first ? "" : "*") << '{' << _residual << '}';
      first = false;
    }
    if (first) {
      os << '1';
    }
    return os.str();
  }

  Factorization Factorization::parse(std::string_view text) {
    if (text == "1") {
      return Factorization();
    }
    std::vector<PrimePower> factors;
    Nat                     residual = 1;
    while (!text.empty()) {
      auto             star  = text.find('*');
      std::string_view token = text.substr(0, star);
      text = star == std::string_view::npos ? std::string_view()
                                            : text.substr(star + 1);
      if (token.empty()) {
        throw DomainError("Factorization::parse: empty token");
      }
      if (token.front() == '{' && token.back() == '}') {
        residual = Nat(std::string(token.substr(1, token.size() - 2)));
        continue;
      }
      auto          caret = token.find('^');
      std::uint64_t p     = 0;
      unsigned      e     = 1;
      auto          ptok  = token.substr(0, caret);
      auto res = std::from_chars(ptok.data(), ptok.data() + ptok.size(), p);
      if (res.ec != std::errc() || res.ptr != ptok.data() + ptok.size()) {
        throw DomainError("Factorization::parse: bad prime '"
                          + std::string(ptok) + "'");
      }
      if (caret != std::string_view::npos) {
        auto etok = token.substr(caret + 1);
        res = std::from_chars(etok.data(), etok.data() + etok.size(), e);
        if (res.ec != std::errc() || res.ptr != etok.data() + etok.size()) {
          throw DomainError("Factorization::parse: bad exponent '"
                            + std::string(etok) + "'");
        }
      }
      factors.push_back({p, e});
    }
    return Factorization(std::move(factors), std::move(residual));
  }

  ////////////////////////////////////////////////////////////////////////
  // Primes
  ////////////////////////////////////////////////////////////////////////

  std::span<std::uint64_t const> primes_up_to(std::uint64_t bound) {
    if (bound > kMaxPrimeBound) {
      throw BoundsError("prime bound " + std::to_string(bound)
                        + " exceeds the supported maximum "
                        + std::to_string(kMaxPrimeBound));
    }
    auto const& all = sieve();
    auto        end = std::upper_bound(all.begin(), all.end(), bound);
    return {all.data(), static_cast<std::size_t>(end - all.begin())};
  }

  // Deterministic Miller-Rabin; the base set is exact below 2^64.
  bool is_prime_u64(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      if (n % p == 0) {
        return n == p;
      }
    }
    std::uint64_t d = n - 1;
    unsigned      s = 0;
    while ((d & 1) == 0) {
      d >>= 1;
      ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      std::uint64_t x = pow_mod(a, d, n);
      if (x == 1 || x == n - 1) {
        continue;
      }
      bool witness = true;
      for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
          witness = false;
          break;
        }
      }
      if (witness) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t next_prime_after(std::uint64_t n) {
    do {
      ++n;
    } while (!is_prime_u64(n));
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factoring
  ////////////////////////////////////////////////////////////////////////

  Factorization factorize(Nat const& n, std::uint64_t prime_bound) {
    if (n == 0) {
      throw DomainError("factorize: n must be positive");
    }
    if (prime_bound < 2) {
      throw DomainError("factorize: prime bound must be at least 2");
    }
    std::vector<PrimePower> factors;
    Nat                     rest = n;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
      if (rest == 1) {
        break;
      }
      if (Nat(p) * p > rest) {
        // rest is prime; it is within the bound only if rest <= bound
        if (rest <= prime_bound) {
          std::uint64_t r = to_u64(rest);
          factors.push_back({r, 1});
          rest = 1;
        }
        break;
      }
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e != 0) {
        factors.push_back({p, e});
      }
    }
    return Factorization(std::move(factors), std::move(rest));
  }

  bool is_smooth(Nat const& n, std::uint64_t prime_bound) {
    return factorize(n, prime_bound).complete();
  }

  std::vector<std::uint64_t> prime_support(Nat const&    n,
                                           std::uint64_t prime_bound) {
    auto f = factorize(n, prime_bound);
    if (!f.complete()) {
      throw NonSmoothError("prime_support: " + to_string(n) + " is not "
                               + std::to_string(prime_bound)
                               + "-smooth (residual "
                               + to_string(f.residual()) + ")",
                           f.residual());
    }
    return f.primes();
  }

  Factorization full_factorization(Nat const& n) {
    auto f = factorize(n, kMaxPrimeBound);
    if (f.complete()) {
      return f;
    }
    Nat const& r = f.residual();
    if (r > std::numeric_limits<std::uint64_t>::max()
        || !is_prime_u64(static_cast<std::uint64_t>(r))) {
      throw DomainError("full_factorization: cofactor " + to_string(r)
                        + " is beyond the supported factoring range");
    }
    auto factors = f.factors();
    factors.push_back({static_cast<std::uint64_t>(r), 1});
    return Factorization(std::move(factors));
  }

  ////////////////////////////////////////////////////////////////////////
  // Divisibility lattice
  ////////////////////////////////////////////////////////////////////////

  NatSet maximal_under_divisibility(std::vector<Nat> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto const& v : values) {
      if (v < 1) {
        throw DomainError("maximal_under_divisibility: values must be >= 1");
      }
    }
    // Scanning from the largest value, a value is maximal iff it divides
    // none of the maximal values found so far.
    NatSet out;
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      bool dominated = std::any_of(out.begin(), out.end(), [&](Nat const& m) {
        return m % *it == 0;
      });
      if (!dominated) {
        out.push_back(*it);
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  NatSet divisor_closure(NatSet const& mu) {
    std::vector<Nat> all;
    for (auto const& m : mu) {
      if (m < 1) {
        throw DomainError("divisor_closure: values must be >= 1");
      }
      std::vector<Nat>    divisors = {Nat(1)};
      Factorization const fm       = full_factorization(m);
      for (auto const& f : fm.factors()) {
        std::size_t const base = divisors.size();
        Nat               pk   = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
          pk *= f.prime;
          for (std::size_t i = 0; i < base; ++i) {
            divisors.push_back(divisors[i] * pk);
          }
        }
      }
      all.insert(all.end(), divisors.begin(), divisors.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  }

  NatSet make_nat_set(std::initializer_list<std::uint64_t> values) {
    NatSet out(values.begin(), values.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string to_string(Nat const& n) {
    return n.str();
  }

  std::uint64_t to_u64(Nat const& n) {
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
      throw BoundsError("value " + n.str() + " does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(n);
  }

  Nat pow(Nat const& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
  }

}  // namespace gk
