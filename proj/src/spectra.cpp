#include "gk/spectra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace gk {

  namespace {

    Nat field_size(std::uint64_t p, unsigned k, char const* who) {
      if (!is_prime_u64(p) || k == 0) {
        throw ParameterError(std::string(who) + ": q must be a prime power");
      }
      return pow(Nat(p), k);
    }

    Spectrum from_formula(std::vector<Nat> values) {
      return {maximal_under_divisibility(std::move(values)),
              SpectrumSource::Formula};
    }

    std::string q_string(std::uint64_t p, unsigned k) {
      return std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
    }

    // (lcm << 1) | parity-of-even-part-count
    std::uint64_t encode(std::uint64_t lcm, unsigned parity) {
      return (lcm << 1) | parity;
    }

    NatSet compute_omega_alternating(unsigned n) {
      // Unbounded knapsack over part sizes: reach[t] holds every
      // (lcm, parity) realized by some partition of t into parts <= k.
      std::vector<std::unordered_set<std::uint64_t>> reach(n + 1);
      reach[0].insert(encode(1, 0));
      for (unsigned k = 1; k <= n; ++k) {
        unsigned const flip = (k % 2 == 0) ? 1 : 0;
        for (unsigned t = k; t <= n; ++t) {
          auto& dst = reach[t];
          for (std::uint64_t code : reach[t - k]) {
            std::uint64_t l = code >> 1;
            unsigned      par = static_cast<unsigned>(code & 1);
            dst.insert(encode(std::lcm(l, std::uint64_t{k}), par ^ flip));
          }
        }
      }
      NatSet out;
      for (std::uint64_t code : reach[n]) {
        if ((code & 1) == 0) {
          out.emplace_back(code >> 1);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  std::string_view to_string(SpectrumSource s) {
    switch (s) {
      case SpectrumSource::Formula:
        return "formula";
      case SpectrumSource::Partition:
        return "partition";
      case SpectrumSource::Oracle:
        return "oracle";
    }
    return "?";
  }

  Spectrum mu_S4(std::uint64_t p, unsigned k) {
    Nat const q = field_size(p, k, "mu_S4");
    if (p == 2 || p == 3) {
      throw ParameterError("mu_S4: characteristic " + std::to_string(p)
                           + " is not supported (needs p odd, p != 3)");
    }
    Nat const q2 = q * q;
    return from_formula({(q2 + 1) / 2, (q2 - 1) / 2, p * (q + 1), p * (q - 1)});
  }

  Spectrum mu_U3(std::uint64_t p, unsigned k) {
    Nat const q = field_size(p, k, "mu_U3");
    if (p == 2) {
      throw ParameterError("mu_U3: even q is not supported");
    }
    Nat const q2 = q * q;
    if ((q + 1) % 3 != 0) {
      return from_formula({q2 - q + 1, q2 - 1, p * (q + 1)});
    }
    return from_formula(
        {(q2 - q + 1) / 3, (q2 - 1) / 3, p * (q + 1) / 3, q + 1});
  }

  Spectrum mu_G2(std::uint64_t p, unsigned k) {
    Nat const q = field_size(p, k, "mu_G2");
    if (p <= 5) {
      throw ParameterError("mu_G2: needs characteristic > 5, got "
                           + std::to_string(p));
    }
    Nat const q2 = q * q;
    return from_formula(
        {p * (q - 1), p * (q + 1), q2 - 1, q2 - q + 1, q2 + q + 1});
  }

  Spectrum mu_U4(std::uint64_t p, unsigned k) {
    Nat const q = field_size(p, k, "mu_U4");
    if (p == 2) {
      throw ParameterError("mu_U4: even q is not supported");
    }
    Nat const d  = boost::multiprecision::gcd(Nat(4), q + 1);
    Nat const q2 = q * q;
    std::vector<Nat> values = {(q - 1) * (q2 + 1) / d,
                               (q2 * q + 1) / d,
                               p * (q2 - 1) / d,
                               q2 - 1};
    if (d == 4) {
      values.push_back(p * (q + 1));
    }
    if (p == 3) {
      values.emplace_back(9);
    }
    return from_formula(std::move(values));
  }

  Spectrum mu_L2(std::uint64_t p, unsigned k) {
    Nat const q = field_size(p, k, "mu_L2");
    if (q < 4) {
      throw ParameterError("mu_L2: needs q >= 4, got " + q_string(p, k));
    }
    unsigned const c = (p == 2) ? 1 : 2;
    return from_formula({Nat(p), (q - 1) / c, (q + 1) / c});
  }

  NatSet omega_alternating(unsigned n) {
    if (n < 5 || n > 100) {
      throw ParameterError("alternating degree must lie in [5, 100], got "
                           + std::to_string(n));
    }
    static std::mutex                  mtx;
    static std::map<unsigned, NatSet>  memo;
    {
      std::lock_guard lock(mtx);
      if (auto it = memo.find(n); it != memo.end()) {
        return it->second;
      }
    }
    NatSet omega = compute_omega_alternating(n);
    std::lock_guard lock(mtx);
    return memo.emplace(n, std::move(omega)).first->second;
  }

  Spectrum mu_alternating(unsigned n) {
    return {maximal_under_divisibility(omega_alternating(n)),
            SpectrumSource::Partition};
  }

  bool has_spectrum_formula(Family f) {
    switch (f) {
      case Family::Alternating:
      case Family::Linear:
      case Family::Unitary:
      case Family::Symplectic:
      case Family::G2:
        return true;
      default:
        return false;
    }
  }

  bool has_spectrum_formula(GroupId const& g) {
    std::uint64_t const p = g.characteristic;
    switch (g.family) {
      case Family::Alternating:
        return g.dim >= 5 && g.dim <= 100;
      case Family::Linear:
        return g.dim == 2;
      case Family::Unitary:
        return (g.dim == 3 || g.dim == 4) && p % 2 == 1;
      case Family::Symplectic:
        return g.dim == 4 && p % 2 == 1 && p != 3;
      case Family::G2:
        return p > 5;
      default:
        return false;
    }
  }

  Spectrum spectrum_of(GroupId const& g) {
    g.validate();
    auto unsupported = [&] {
      return NotImplementedError(
          "no spectrum formula for " + g.to_string() + " (family "
          + std::string(family_token(g.family))
          + "); implemented: L2, U3, U4, S4, G2, A");
    };
    switch (g.family) {
      case Family::Alternating:
        return mu_alternating(g.dim);
      case Family::Linear:
        if (g.dim == 2) {
          return mu_L2(g.characteristic, g.field_exponent);
        }
        break;
      case Family::Unitary:
        if (g.dim == 3) {
          return mu_U3(g.characteristic, g.field_exponent);
        }
        if (g.dim == 4) {
          return mu_U4(g.characteristic, g.field_exponent);
        }
        break;
      case Family::Symplectic:
        if (g.dim == 4) {
          return mu_S4(g.characteristic, g.field_exponent);
        }
        break;
      case Family::G2:
        return mu_G2(g.characteristic, g.field_exponent);
      default:
        break;
    }
    throw unsupported();
  }

  bool is_antichain(NatSet const& mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t j = 0; j < mu.size(); ++j) {
        if (i != j && mu[j] % mu[i] == 0) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::uint64_t> spectrum_primes(NatSet const& mu) {
    std::vector<std::uint64_t> out;
    for (auto const& m : mu) {
      auto ps = full_factorization(m).primes();
      out.insert(out.end(), ps.begin(), ps.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace gk
