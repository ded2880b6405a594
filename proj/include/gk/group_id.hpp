// Identifiers for finite nonabelian simple groups.

#ifndef GK_GROUP_ID_HPP_
#define GK_GROUP_ID_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gk/arith.hpp"

namespace gk {

  enum class Family {
    Alternating,
    Linear,           // L_n(q)
    Unitary,          // U_n(q)
    Symplectic,       // S_{2m}(q)
    OrthogonalOdd,    // O_{2m+1}(q), q odd
    OrthogonalPlus,   // O+_{2m}(q)
    OrthogonalMinus,  // O-_{2m}(q)
    G2,
    F4,
    E6,
    E7,
    E8,
    TwistedE6,  // 2E6(q)
    Triality,   // 3D4(q)
    Suzuki,     // 2B2(q), q = 2^(2m+1)
    ReeG2,      // 2G2(q), q = 3^(2m+1)
    ReeF4,      // 2F4(q), q = 2^(2m+1)
    Sporadic
  };

  // Short family token used in names and on the command line ("L", "U",
  // "S", "O", "O+", "O-", "G2", ..., "A" for alternating).
  std::string_view family_token(Family f);

  // For Alternating, `dim` is the degree; for classical families it is the
  // dimension of the natural module (S4 has dim 4, O+8 has dim 8). Groups
  // of Lie type carry q = char^field_exponent.
  struct GroupId {
    Family        family         = Family::Alternating;
    unsigned      dim            = 0;
    std::uint64_t characteristic = 0;
    unsigned      field_exponent = 0;
    std::string   sporadic_name;

    static GroupId alternating(unsigned degree);
    static GroupId lie(Family        family,
                       unsigned      dim,
                       std::uint64_t characteristic,
                       unsigned      field_exponent = 1);
    // Exceptional families take no dimension.
    static GroupId
    exceptional(Family family, std::uint64_t characteristic, unsigned field_exponent = 1);
    static GroupId sporadic(std::string_view name);

    bool is_lie_type() const noexcept {
      return family != Family::Alternating && family != Family::Sporadic;
    }
    Nat q() const;
    // Rank of the ambient algebraic group (n-1 for L_n and U_n, m for
    // S_{2m}, O_{2m+1}, O±_{2m}).
    unsigned lie_rank() const;

    // "U3(27)", "L2(31^2)", "A37", "2G2(27)", "O+8(2)", "M11". Fields
    // q < 100 are printed in decimal, larger proper powers as p^k.
    std::string    to_string() const;
    static GroupId parse(std::string_view text);
    // Command-line selector: family token plus a q (or n) argument,
    // e.g. ("U3", "27"), ("A", "38"), ("L2", "31^2").
    static GroupId from_selector(std::string_view family,
                                 std::string_view parameter);

    // Throws ParameterError unless the parameters name a simple group.
    void validate() const;

    bool operator==(GroupId const&) const = default;
    std::strong_ordering operator<=>(GroupId const& other) const;
  };

  std::ostream& operator<<(std::ostream& os, GroupId const& g);

}  // namespace gk

#endif  // GK_GROUP_ID_HPP_
