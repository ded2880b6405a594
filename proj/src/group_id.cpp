#include "gk/group_id.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <utility>

#include "gk/catalog.hpp"

namespace gk {

  namespace {

    struct FamilyName {
      Family           family;
      std::string_view token;
    };

    // Longest tokens first so that prefix matching is unambiguous.
    constexpr std::array<FamilyName, 17> kFamilyNames = {{
        {Family::TwistedE6, "2E6"},
        {Family::Triality, "3D4"},
        {Family::Suzuki, "2B2"},
        {Family::ReeG2, "2G2"},
        {Family::ReeF4, "2F4"},
        {Family::OrthogonalPlus, "O+"},
        {Family::OrthogonalMinus, "O-"},
        {Family::G2, "G2"},
        {Family::F4, "F4"},
        {Family::E6, "E6"},
        {Family::E7, "E7"},
        {Family::E8, "E8"},
        {Family::Linear, "L"},
        {Family::Unitary, "U"},
        {Family::Symplectic, "S"},
        {Family::OrthogonalOdd, "O"},
        {Family::Alternating, "A"},
    }};

    bool is_classical(Family f) {
      switch (f) {
        case Family::Linear:
        case Family::Unitary:
        case Family::Symplectic:
        case Family::OrthogonalOdd:
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus:
          return true;
        default:
          return false;
      }
    }

    unsigned parse_unsigned(std::string_view s, std::string_view what) {
      unsigned v   = 0;
      auto     res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParameterError("cannot parse " + std::string(what) + " '"
                             + std::string(s) + "'");
      }
      return v;
    }

    // "27" or "3^3" -> (3, 3); the value must be a prime power.
    std::pair<std::uint64_t, unsigned> parse_prime_power(std::string_view s) {
      auto caret = s.find('^');
      if (caret != std::string_view::npos) {
        std::uint64_t p = parse_unsigned(s.substr(0, caret), "characteristic");
        unsigned      k = parse_unsigned(s.substr(caret + 1), "field exponent");
        if (!is_prime_u64(p) || k == 0) {
          throw ParameterError("'" + std::string(s) + "' is not a prime power");
        }
        return {p, k};
      }
      Nat q;
      try {
        q = Nat(std::string(s));
      } catch (std::exception const&) {
        throw ParameterError("cannot parse field size '" + std::string(s) + "'");
      }
      if (q < 2) {
        throw ParameterError("field size must be at least 2");
      }
      Factorization f;
      try {
        f = full_factorization(q);
      } catch (DomainError const&) {
        throw ParameterError("cannot factor field size '" + std::string(s)
                             + "'");
      }
      if (f.factors().size() != 1) {
        throw ParameterError("'" + std::string(s) + "' is not a prime power");
      }
      return {f.factors()[0].prime, f.factors()[0].exponent};
    }

    std::string field_string(std::uint64_t p, unsigned k) {
      Nat q = pow(Nat(p), k);
      if (k == 1 || q < 100) {
        return to_string(q);
      }
      return std::to_string(p) + "^" + std::to_string(k);
    }
  }  // namespace

  std::string_view family_token(Family f) {
    if (f == Family::Sporadic) {
      return "Sporadic";
    }
    for (auto const& fn : kFamilyNames) {
      if (fn.family == f) {
        return fn.token;
      }
    }
    return "?";
  }

  GroupId GroupId::alternating(unsigned degree) {
    GroupId g;
    g.family = Family::Alternating;
    g.dim    = degree;
    return g;
  }

  GroupId GroupId::lie(Family        family,
                       unsigned      dim,
                       std::uint64_t characteristic,
                       unsigned      field_exponent) {
    GroupId g;
    g.family         = family;
    g.dim            = dim;
    g.characteristic = characteristic;
    g.field_exponent = field_exponent;
    return g;
  }

  GroupId GroupId::exceptional(Family family,
                               std::uint64_t characteristic,
                               unsigned      field_exponent) {
    return lie(family, 0, characteristic, field_exponent);
  }

  GroupId GroupId::sporadic(std::string_view name) {
    GroupId g;
    g.family        = Family::Sporadic;
    g.sporadic_name = std::string(name);
    return g;
  }

  Nat GroupId::q() const {
    if (!is_lie_type()) {
      throw ParameterError(to_string() + " has no field parameter");
    }
    return pow(Nat(characteristic), field_exponent);
  }

  unsigned GroupId::lie_rank() const {
    switch (family) {
      case Family::Linear:
      case Family::Unitary:
        return dim - 1;
      case Family::Symplectic:
      case Family::OrthogonalOdd:
      case Family::OrthogonalPlus:
      case Family::OrthogonalMinus:
        return dim / 2;
      case Family::G2:
      case Family::Suzuki:
      case Family::ReeG2:
        return 2;
      case Family::F4:
      case Family::Triality:
      case Family::ReeF4:
        return 4;
      case Family::E6:
      case Family::TwistedE6:
        return 6;
      case Family::E7:
        return 7;
      case Family::E8:
        return 8;
      default:
        return 0;
    }
  }

  std::string GroupId::to_string() const {
    if (family == Family::Sporadic) {
      return sporadic_name;
    }
    std::string out(family_token(family));
    if (family == Family::Alternating) {
      return out + std::to_string(dim);
    }
    if (is_classical(family)) {
      out += std::to_string(dim);
    }
    return out + "(" + field_string(characteristic, field_exponent) + ")";
  }

  GroupId GroupId::parse(std::string_view text) {
    if (text.empty()) {
      throw ParameterError("empty group name");
    }
    if (is_sporadic_name(text)) {
      return sporadic(text);
    }
    if (text.starts_with("Alt(") && text.ends_with(")")) {
      return alternating(
          parse_unsigned(text.substr(4, text.size() - 5), "degree"));
    }
    for (auto const& [fam, token] : kFamilyNames) {
      if (!text.starts_with(token)) {
        continue;
      }
      std::string_view rest = text.substr(token.size());
      if (fam == Family::Alternating) {
        return alternating(parse_unsigned(rest, "degree"));
      }
      auto open = rest.find('(');
      if (open == std::string_view::npos || !rest.ends_with(")")) {
        throw ParameterError("cannot parse group name '" + std::string(text)
                             + "'");
      }
      unsigned dim = 0;
      if (is_classical(fam)) {
        dim = parse_unsigned(rest.substr(0, open), "dimension");
      } else if (open != 0) {
        throw ParameterError("cannot parse group name '" + std::string(text)
                             + "'");
      }
      auto [p, k] = parse_prime_power(rest.substr(open + 1, rest.size() - open - 2));
      return lie(fam, dim, p, k);
    }
    throw ParameterError("unknown group '" + std::string(text) + "'");
  }

  GroupId GroupId::from_selector(std::string_view family,
                                 std::string_view parameter) {
    if (family == "A" || family == "Alt") {
      return alternating(parse_unsigned(parameter, "degree"));
    }
    return parse(std::string(family) + "(" + std::string(parameter) + ")");
  }

  void GroupId::validate() const {
    auto fail = [this](std::string const& why) {
      throw ParameterError(to_string() + ": " + why);
    };
    if (family == Family::Sporadic) {
      if (!is_sporadic_name(sporadic_name)) {
        fail("unknown sporadic group");
      }
      return;
    }
    if (family == Family::Alternating) {
      if (dim < 5) {
        fail("alternating groups need degree >= 5");
      }
      return;
    }
    if (!is_prime_u64(characteristic) || field_exponent == 0) {
      fail("q must be a prime power");
    }
    std::uint64_t const p = characteristic;
    unsigned const      k = field_exponent;
    auto                q_is = [&](std::uint64_t pp, unsigned kk) {
      return p == pp && k == kk;
    };
    switch (family) {
      case Family::Linear:
        if (dim < 2 || (dim == 2 && (q_is(2, 1) || q_is(3, 1)))) {
          fail("needs n >= 2 and (n, q) not (2, 2) or (2, 3)");
        }
        break;
      case Family::Unitary:
        if (dim < 3 || (dim == 3 && q_is(2, 1))) {
          fail("needs n >= 3 and (n, q) != (3, 2)");
        }
        break;
      case Family::Symplectic:
        if (dim < 4 || dim % 2 != 0 || (dim == 4 && q_is(2, 1))) {
          fail("needs even dimension >= 4 and (dim, q) != (4, 2)");
        }
        break;
      case Family::OrthogonalOdd:
        if (dim < 7 || dim % 2 != 1 || p == 2) {
          fail("needs odd dimension >= 7 and odd q");
        }
        break;
      case Family::OrthogonalPlus:
      case Family::OrthogonalMinus:
        if (dim < 8 || dim % 2 != 0) {
          fail("needs even dimension >= 8");
        }
        break;
      case Family::G2:
        if (q_is(2, 1)) {
          fail("needs q >= 3");
        }
        break;
      case Family::Suzuki:
      case Family::ReeF4:
        if (p != 2 || k % 2 == 0 || k < 3) {
          fail("needs q = 2^(2m+1) with m >= 1");
        }
        break;
      case Family::ReeG2:
        if (p != 3 || k % 2 == 0 || k < 3) {
          fail("needs q = 3^(2m+1) with m >= 1");
        }
        break;
      default:
        break;
    }
    if (!is_classical(family) && dim != 0) {
      fail("exceptional families take no dimension");
    }
  }

  std::strong_ordering GroupId::operator<=>(GroupId const& other) const {
    if (auto c = family <=> other.family; c != 0) {
      return c;
    }
    if (auto c = dim <=> other.dim; c != 0) {
      return c;
    }
    if (is_lie_type()) {
      Nat a = q(), b = other.q();
      if (a != b) {
        return a < b ? std::strong_ordering::less
                     : std::strong_ordering::greater;
      }
    }
    return sporadic_name <=> other.sporadic_name;
  }

  std::ostream& operator<<(std::ostream& os, GroupId const& g) {
    return os << g.to_string();
  }

}  // namespace gk
