// Table-driven arithmetic in F_{p^k}, p^k <= 2^16.

#ifndef GK_ORACLE_FINITE_FIELD_HPP_
#define GK_ORACLE_FINITE_FIELD_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gk::oracle {

  // An element is stored as the index sum(c_i * p^i) of its coefficient
  // vector (c_0, ..., c_{k-1}) modulo the field's defining polynomial.
  using FieldElem = std::uint16_t;

  class FiniteField {
   public:
    static constexpr std::uint32_t kMaxOrder  = 1u << 16;
    static constexpr unsigned      kMaxDegree = 6;

    // Defining polynomial: the least monic irreducible of degree k, with
    // polynomials compared by (c_{k-1}, ..., c_0). BoundsError if p is not
    // prime, k is outside [1, 6] or p^k > 2^16.
    FiniteField(std::uint32_t p, unsigned k);

    std::uint32_t characteristic() const noexcept {
      return _p;
    }
    unsigned degree() const noexcept {
      return _k;
    }
    std::uint32_t order() const noexcept {
      return _q;
    }
    // c_0, ..., c_{k-1} of the defining polynomial; the leading 1 is
    // implicit.
    std::vector<std::uint32_t> const& modulus() const noexcept {
      return _modulus;
    }
    std::string modulus_string() const;  // e.g. "x^2+x+1"

    FieldElem zero() const noexcept {
      return 0;
    }
    FieldElem one() const noexcept {
      return 1;
    }
    // Least primitive element by index.
    FieldElem generator() const noexcept {
      return _generator;
    }
    FieldElem from_int(std::int64_t n) const;

    std::vector<std::uint32_t> coefficients(FieldElem a) const;
    FieldElem from_coefficients(std::vector<std::uint32_t> const& c) const;

    FieldElem add(FieldElem a, FieldElem b) const {
      return _add_table.empty() ? add_slow(a, b)
                                : _add_table[std::size_t{a} * _q + b];
    }
    FieldElem neg(FieldElem a) const {
      return _neg[a];
    }
    FieldElem sub(FieldElem a, FieldElem b) const {
      return add(a, _neg[b]);
    }
    FieldElem mul(FieldElem a, FieldElem b) const {
      if (a == 0 || b == 0) {
        return 0;
      }
      std::uint32_t s = _log[a] + _log[b];
      return _exp[s >= _q - 1 ? s - (_q - 1) : s];
    }
    FieldElem inv(FieldElem a) const;  // DomainError for 0
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    FieldElem frobenius(FieldElem a) const {
      return pow(a, _p);
    }
    // Multiplicative order of a nonzero element.
    std::uint32_t element_order(FieldElem a) const;

    // Slow reference multiplication on coefficient vectors, independent of
    // the log tables.
    FieldElem mul_polynomial(FieldElem a, FieldElem b) const;

    bool operator==(FiniteField const& other) const noexcept {
      return _p == other._p && _k == other._k;
    }

   private:
    FieldElem add_slow(FieldElem a, FieldElem b) const;

    std::uint32_t              _p;
    unsigned                   _k;
    std::uint32_t              _q;
    std::vector<std::uint32_t> _modulus;
    FieldElem                  _generator = 1;
    std::vector<FieldElem>     _exp;  // size q - 1
    std::vector<std::uint32_t> _log;  // size q, _log[0] unused
    std::vector<FieldElem>     _neg;
    std::vector<FieldElem>     _add_table;  // q*q when q <= 1024
  };

}  // namespace gk::oracle

#endif  // GK_ORACLE_FINITE_FIELD_HPP_
