#include "gk/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "gk/embedded_data.hpp"

namespace gk {

  namespace {

    // |g| = p^p_exponent * prod(pieces) / divisor
    struct OrderShape {
      std::uint64_t    p          = 0;
      unsigned         p_exponent = 0;
      std::vector<Nat> pieces;
      Nat              divisor = 1;
    };

    OrderShape order_shape(GroupId const& g) {
      OrderShape s;
      if (g.family == Family::Alternating) {
        // n!/2 = 3 * 4 * ... * n
        for (unsigned i = 3; i <= g.dim; ++i) {
          s.pieces.emplace_back(i);
        }
        return s;
      }
      Nat const      q  = g.q();
      unsigned const k  = g.field_exponent;
      s.p               = g.characteristic;
      auto qpow         = [&](unsigned i) { return pow(q, i); };
      auto set_q_power  = [&](unsigned n) { s.p_exponent = n * k; };
      auto minus_one    = [&](std::initializer_list<unsigned> is) {
        for (unsigned i : is) {
          s.pieces.push_back(qpow(i) - 1);
        }
      };
      unsigned const n = g.dim;
      unsigned const m = n / 2;
      switch (g.family) {
        case Family::Linear:
          set_q_power(n * (n - 1) / 2);
          for (unsigned i = 2; i <= n; ++i) {
            s.pieces.push_back(qpow(i) - 1);
          }
          s.divisor = gcd(Nat(n), q - 1);
          break;
        case Family::Unitary:
          set_q_power(n * (n - 1) / 2);
          for (unsigned i = 2; i <= n; ++i) {
            s.pieces.push_back(i % 2 == 0 ? qpow(i) - 1 : qpow(i) + 1);
          }
          s.divisor = gcd(Nat(n), q + 1);
          break;
        case Family::Symplectic:
        case Family::OrthogonalOdd:
          set_q_power(m * m);
          for (unsigned i = 1; i <= m; ++i) {
            s.pieces.push_back(qpow(2 * i) - 1);
          }
          s.divisor = gcd(Nat(2), q - 1);
          break;
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus: {
          bool const plus = g.family == Family::OrthogonalPlus;
          set_q_power(m * (m - 1));
          for (unsigned i = 1; i < m; ++i) {
            s.pieces.push_back(qpow(2 * i) - 1);
          }
          Nat top = plus ? qpow(m) - 1 : qpow(m) + 1;
          s.divisor = gcd(Nat(4), top);
          s.pieces.push_back(std::move(top));
          break;
        }
        case Family::G2:
          set_q_power(6);
          minus_one({2, 6});
          break;
        case Family::F4:
          set_q_power(24);
          minus_one({2, 6, 8, 12});
          break;
        case Family::E6:
          set_q_power(36);
          minus_one({2, 5, 6, 8, 9, 12});
          s.divisor = gcd(Nat(3), q - 1);
          break;
        case Family::TwistedE6:
          set_q_power(36);
          minus_one({2, 6, 8, 12});
          s.pieces.push_back(qpow(5) + 1);
          s.pieces.push_back(qpow(9) + 1);
          s.divisor = gcd(Nat(3), q + 1);
          break;
        case Family::E7:
          set_q_power(63);
          minus_one({2, 6, 8, 10, 12, 14, 18});
          s.divisor = gcd(Nat(2), q - 1);
          break;
        case Family::E8:
          set_q_power(120);
          minus_one({2, 8, 12, 14, 18, 20, 24, 30});
          break;
        case Family::Triality:
          set_q_power(12);
          minus_one({2, 6});
          s.pieces.push_back(qpow(8) + qpow(4) + 1);
          break;
        case Family::Suzuki:
          set_q_power(2);
          s.pieces = {q - 1, qpow(2) + 1};
          break;
        case Family::ReeG2:
          set_q_power(3);
          s.pieces = {q - 1, qpow(3) + 1};
          break;
        case Family::ReeF4:
          set_q_power(12);
          s.pieces = {q - 1, qpow(3) + 1, qpow(4) - 1, qpow(6) + 1};
          break;
        default:
          throw ParameterError("no order formula for " + g.to_string());
      }
      return s;
    }

    // Factorization of the shape with primes <= bound. With early_exit the
    // scan stops at the first non-smooth piece and returns an incomplete
    // result.
    Factorization factor_shape(OrderShape const& s,
                               std::uint64_t     bound,
                               bool              early_exit) {
      Factorization acc;
      if (s.p_exponent > 0) {
        acc = factorize(pow(Nat(s.p), s.p_exponent), bound);
        if (early_exit && !acc.complete()) {
          return acc;
        }
      }
      for (auto const& piece : s.pieces) {
        auto f = factorize(piece, bound);
        acc    = acc * f;
        if (early_exit && !f.complete()) {
          return acc;
        }
      }
      if (s.divisor != 1) {
        acc = acc / factorize(s.divisor, bound);
      }
      return acc;
    }

    struct Tables {
      std::map<std::string, Factorization, std::less<>> sporadic;
      std::vector<std::string>                          sporadic_order;
    };

    template <typename F>
    void for_each_record(std::string_view text, F&& f) {
      std::size_t line_no = 0;
      while (!text.empty()) {
        auto             nl   = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view()
                                            : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) {
          continue;
        }
        auto bar = line.find('|');
        if (bar == std::string_view::npos) {
          throw DomainError("embedded table line " + std::to_string(line_no)
                            + ": missing '|'");
        }
        f(line.substr(0, bar), line.substr(bar + 1));
      }
    }

    // Sporadic names come first: parsing the coincidence records below
    // consults them.
    Tables const& sporadic_tables() {
      static Tables const t = [] {
        Tables out;
        for_each_record(data::kSporadicOrders,
                        [&](std::string_view name, std::string_view value) {
                          out.sporadic.emplace(std::string(name),
                                               Factorization::parse(value));
                          out.sporadic_order.emplace_back(name);
                        });
        return out;
      }();
      return t;
    }

    std::vector<Coincidence> const& coincidence_records() {
      static std::vector<Coincidence> const t = [] {
        std::vector<Coincidence> out;
        for_each_record(data::kCoincidences,
                        [&](std::string_view alias, std::string_view canon) {
                          out.push_back({GroupId::parse(alias), GroupId::parse(canon)});
                        });
        return out;
      }();
      return t;
    }

    unsigned parse_cap(std::string_view key, std::string_view value) {
      unsigned v   = 0;
      auto     res = std::from_chars(value.data(), value.data() + value.size(), v);
      if (value.empty() || res.ec != std::errc()
          || res.ptr != value.data() + value.size() || v == 0) {
        throw ParameterError("caps: '" + std::string(key)
                             + "' needs a positive integer, got '"
                             + std::string(value) + "'");
      }
      return v;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SearchCaps
  ////////////////////////////////////////////////////////////////////////

  void SearchCaps::validate() const {
    if (max_prime == 0 || max_field_exponent == 0 || max_rank == 0
        || max_alt_degree == 0) {
      throw ParameterError("search caps must be positive");
    }
    if (max_prime > kMaxPrimeBound) {
      throw ParameterError("max_prime exceeds " + std::to_string(kMaxPrimeBound));
    }
  }

  SearchCaps SearchCaps::parse(std::string_view text) {
    SearchCaps caps;
    std::size_t line_no = 0;
    while (!text.empty()) {
      auto             nl   = text.find('\n');
      std::string_view line = trim(text.substr(0, nl));
      text = nl == std::string_view::npos ? std::string_view()
                                          : text.substr(nl + 1);
      ++line_no;
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParameterError("caps line " + std::to_string(line_no)
                             + ": expected 'key = value'");
      }
      auto key   = trim(line.substr(0, eq));
      auto value = trim(line.substr(eq + 1));
      if (key == "max_prime") {
        caps.max_prime = parse_cap(key, value);
      } else if (key == "max_field_exponent") {
        caps.max_field_exponent = parse_cap(key, value);
      } else if (key == "max_rank") {
        caps.max_rank = parse_cap(key, value);
      } else if (key == "max_alt_degree") {
        caps.max_alt_degree = parse_cap(key, value);
      } else {
        throw ParameterError("caps: unknown key '" + std::string(key) + "'");
      }
    }
    caps.validate();
    return caps;
  }

  std::string SearchCaps::to_text() const {
    std::ostringstream os;
    os << "max_prime = " << max_prime << '\n'
       << "max_field_exponent = " << max_field_exponent << '\n'
       << "max_rank = " << max_rank << '\n'
       << "max_alt_degree = " << max_alt_degree << '\n';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders
  ////////////////////////////////////////////////////////////////////////

  Factorization order_of(GroupId const& g) {
    return order_of(g, kMaxPrimeBound);
  }

  Factorization order_of(GroupId const& g, std::uint64_t prime_bound) {
    g.validate();
    if (g.family == Family::Sporadic) {
      auto const& f = sporadic_order(g.sporadic_name);
      if (f.largest_prime() <= prime_bound) {
        return f;
      }
      return factorize(f.value(), prime_bound);
    }
    bool const early_exit = prime_bound < kMaxPrimeBound;
    return factor_shape(order_shape(g), prime_bound, early_exit);
  }

  Factorization sporadic_order(std::string_view name) {
    auto const& t  = sporadic_tables().sporadic;
    auto        it = t.find(name);
    if (it == t.end()) {
      throw ParameterError("unknown sporadic group '" + std::string(name) + "'");
    }
    return it->second;
  }

  bool is_sporadic_name(std::string_view name) {
    return sporadic_tables().sporadic.contains(name);
  }

  std::vector<std::string> sporadic_names() {
    return sporadic_tables().sporadic_order;
  }

  std::vector<Coincidence> const& coincidences() {
    return coincidence_records();
  }

  GroupId canonical(GroupId const& g) {
    for (auto const& c : coincidences()) {
      if (c.alias == g) {
        return c.canonical;
      }
    }
    return g;
  }

  std::string_view sporadic_order_table() {
    return data::kSporadicOrders;
  }

  std::string_view coincidence_table() {
    return data::kCoincidences;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  Enumeration enumerate_S_p(std::uint64_t p, SearchCaps const& caps) {
    caps.validate();
    if (!is_prime_u64(p)) {
      throw ParameterError("enumerate_S_p: " + std::to_string(p)
                           + " is not prime");
    }
    if (p > kMaxPrimeBound) {
      throw BoundsError("enumerate_S_p: p exceeds "
                        + std::to_string(kMaxPrimeBound));
    }
    std::set<GroupId> found;
    // Returns false when |g| is not p-smooth.
    auto consider = [&](GroupId const& g) {
      auto f = order_of(g, p);
      if (!f.complete()) {
        return false;
      }
      if (f.exponent(p) > 0) {
        found.insert(canonical(g));
      }
      return true;
    };

    // A_n with n >= next prime after p has a prime divisor above p.
    unsigned const alt_hi = static_cast<unsigned>(std::min<std::uint64_t>(
        caps.max_alt_degree, next_prime_after(p) - 1));
    for (unsigned n = std::max<unsigned>(5, static_cast<unsigned>(p)); n <= alt_hi;
         ++n) {
      consider(GroupId::alternating(n));
    }

    std::uint64_t const char_hi = std::min<std::uint64_t>(p, caps.max_prime);
    unsigned const      r       = caps.max_rank;
    // Within one classical family the order for rank m divides the order
    // for rank m + 1 up to the small diagonal divisor, so the scan stops at
    // the first non-smooth rank.
    auto scan = [&](Family fam, unsigned dim_lo, unsigned dim_step,
                    unsigned dim_hi, std::uint64_t c, unsigned k) {
      for (unsigned dim = dim_lo; dim <= dim_hi; dim += dim_step) {
        GroupId g = GroupId::lie(fam, dim, c, k);
        try {
          g.validate();
        } catch (ParameterError const&) {
          continue;
        }
        if (g.lie_rank() > r) {
          break;
        }
        if (!consider(g)) {
          break;
        }
      }
    };
    for (std::uint64_t c : primes_up_to(char_hi)) {
      for (unsigned k = 1; k <= caps.max_field_exponent; ++k) {
        scan(Family::Linear, 2, 1, r + 1, c, k);
        scan(Family::Unitary, 3, 1, r + 1, c, k);
        scan(Family::Symplectic, 4, 2, 2 * r, c, k);
        if (c != 2) {
          scan(Family::OrthogonalOdd, 7, 2, 2 * r + 1, c, k);
        }
        scan(Family::OrthogonalPlus, 8, 2, 2 * r, c, k);
        scan(Family::OrthogonalMinus, 8, 2, 2 * r, c, k);
        for (Family fam : {Family::G2, Family::F4, Family::E6, Family::E7,
                           Family::E8, Family::TwistedE6, Family::Triality,
                           Family::Suzuki, Family::ReeG2, Family::ReeF4}) {
          GroupId g = GroupId::exceptional(fam, c, k);
          try {
            g.validate();
          } catch (ParameterError const&) {
            continue;
          }
          if (g.lie_rank() <= r) {
            consider(g);
          }
        }
      }
    }
    for (auto const& name : sporadic_names()) {
      consider(GroupId::sporadic(name));
    }
    return {p, caps, std::vector<GroupId>(found.begin(), found.end())};
  }

  std::vector<GroupId> reference_S37() {
    std::vector<GroupId> out;
    for (auto name : {"L2(37)", "U3(11)", "L2(31^2)", "S4(31)", "2G2(27)",
                      "U3(27)", "L2(11^3)", "G2(11)", "U4(31)", "A37", "A38",
                      "A39", "A40"}) {
      out.push_back(GroupId::parse(name));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool out_primes_bounded(GroupId const& g) {
    g.validate();
    if (g.family == Family::Sporadic) {
      throw ScopeError(g.to_string()
                       + ": sporadic groups are outside the encoded scope of "
                         "the outer-automorphism fact");
    }
    auto order = order_of(g, 97);
    if (!order.complete() || order.largest_prime() < 5) {
      throw ScopeError(g.to_string()
                       + ": largest prime divisor of the order is not in "
                         "[5, 97]");
    }
    return true;
  }

}  // namespace gk
