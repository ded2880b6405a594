#include "gk/oracle/finite_field.hpp"

#include <sstream>

#include "gk/arith.hpp"
#include "gk/error.hpp"

namespace gk::oracle {

  namespace {

    using Poly = std::vector<std::uint32_t>;  // low degree first

    void trim(Poly& a) {
      while (!a.empty() && a.back() == 0) {
        a.pop_back();
      }
    }

    // Remainder of a modulo the monic polynomial m, coefficients mod p.
    Poly poly_mod(Poly a, Poly const& m, std::uint32_t p) {
      trim(a);
      std::size_t const dm = m.size() - 1;
      while (a.size() > dm) {
        std::uint32_t const lead  = a.back();
        std::size_t const   shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
          a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
        }
        trim(a);
      }
      return a;
    }

    Poly index_to_poly(std::uint32_t idx, std::uint32_t p, unsigned len) {
      Poly c(len, 0);
      for (unsigned i = 0; i < len; ++i) {
        c[i] = idx % p;
        idx /= p;
      }
      return c;
    }

    bool is_irreducible(Poly const& f, std::uint32_t p) {
      unsigned const k = static_cast<unsigned>(f.size() - 1);
      for (unsigned d = 1; d <= k / 2; ++d) {
        std::uint32_t count = 1;
        for (unsigned i = 0; i < d; ++i) {
          count *= p;
        }
        for (std::uint32_t idx = 0; idx < count; ++idx) {
          Poly g = index_to_poly(idx, p, d);
          g.push_back(1);
          if (poly_mod(f, g, p).empty()) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  FiniteField::FiniteField(std::uint32_t p, unsigned k) : _p(p), _k(k), _q(1) {
    if (!is_prime_u64(p)) {
      throw BoundsError("FiniteField: " + std::to_string(p) + " is not prime");
    }
    if (k < 1 || k > kMaxDegree) {
      throw BoundsError("FiniteField: degree must lie in [1, 6]");
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxOrder) {
        throw BoundsError("FiniteField: p^k exceeds 2^16");
      }
    }
    _q = static_cast<std::uint32_t>(q);

    // Defining polynomial. Index order of the low coefficients compares
    // c_{k-1} first, which is the required lexicographic order.
    for (std::uint32_t idx = 0; idx < _q; ++idx) {
      Poly f = index_to_poly(idx, p, k);
      f.push_back(1);
      if (k == 1 || is_irreducible(f, p)) {
        f.pop_back();
        _modulus = std::move(f);
        break;
      }
    }

    _neg.resize(_q);
    for (std::uint32_t a = 0; a < _q; ++a) {
      auto c = coefficients(static_cast<FieldElem>(a));
      for (auto& x : c) {
        x = (p - x) % p;
      }
      _neg[a] = from_coefficients(c);
    }
    if (_q <= 1024) {
      _add_table.resize(std::size_t{_q} * _q);
      for (std::uint32_t a = 0; a < _q; ++a) {
        for (std::uint32_t b = 0; b < _q; ++b) {
          _add_table[std::size_t{a} * _q + b] = add_slow(
              static_cast<FieldElem>(a), static_cast<FieldElem>(b));
        }
      }
    }

    // Least primitive element, found with polynomial multiplication.
    for (std::uint32_t g = 1; g < _q; ++g) {
      FieldElem     x     = static_cast<FieldElem>(g);
      FieldElem     power = x;
      std::uint32_t ord   = 1;
      while (power != 1) {
        power = mul_polynomial(power, x);
        ++ord;
      }
      if (ord == _q - 1) {
        _generator = x;
        break;
      }
    }
    _exp.resize(_q - 1);
    _log.assign(_q, 0);
    FieldElem power = 1;
    for (std::uint32_t i = 0; i + 1 < _q; ++i) {
      _exp[i]     = power;
      _log[power] = i;
      power       = mul_polynomial(power, _generator);
    }
  }

  std::string FiniteField::modulus_string() const {
    std::ostringstream os;
    os << "x";
    if (_k > 1) {
      os << '^' << _k;
    }
    for (unsigned i = _k; i-- > 0;) {
      std::uint32_t c = _modulus[i];
      if (c == 0) {
        continue;
      }
      os << '+';
      if (i == 0) {
        os << c;
        continue;
      }
      if (c != 1) {
        os << c << '*';
      }
      os << 'x';
      if (i > 1) {
        os << '^' << i;
      }
    }
    return os.str();
  }

  FieldElem FiniteField::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(_p);
    if (r < 0) {
      r += _p;
    }
    return static_cast<FieldElem>(r);
  }

  std::vector<std::uint32_t> FiniteField::coefficients(FieldElem a) const {
    return index_to_poly(a, _p, _k);
  }

  FieldElem
  FiniteField::from_coefficients(std::vector<std::uint32_t> const& c) const {
    std::uint32_t idx = 0;
    for (unsigned i = _k; i-- > 0;) {
      idx = idx * _p + (i < c.size() ? c[i] % _p : 0);
    }
    return static_cast<FieldElem>(idx);
  }

  FieldElem FiniteField::add_slow(FieldElem a, FieldElem b) const {
    std::uint32_t x = a, y = b, out = 0, scale = 1;
    for (unsigned i = 0; i < _k; ++i) {
      out += ((x % _p + y % _p) % _p) * scale;
      x /= _p;
      y /= _p;
      scale *= _p;
    }
    return static_cast<FieldElem>(out);
  }

  FieldElem FiniteField::inv(FieldElem a) const {
    if (a == 0) {
      throw DomainError("FiniteField: zero has no inverse");
    }
    std::uint32_t l = _log[a];
    return _exp[l == 0 ? 0 : (_q - 1) - l];
  }

  FieldElem FiniteField::pow(FieldElem a, std::uint64_t e) const {
    if (e == 0) {
      return 1;
    }
    if (a == 0) {
      return 0;
    }
    std::uint64_t const l = (static_cast<std::uint64_t>(_log[a]) * (e % (_q - 1)))
                            % (_q - 1);
    return _exp[l];
  }

  std::uint32_t FiniteField::element_order(FieldElem a) const {
    if (a == 0) {
      throw DomainError("FiniteField: zero has no multiplicative order");
    }
    std::uint32_t ord = 1;
    for (FieldElem x = a; x != 1; x = mul(x, a)) {
      ++ord;
    }
    return ord;
  }

  FieldElem FiniteField::mul_polynomial(FieldElem a, FieldElem b) const {
    Poly x = coefficients(a), y = coefficients(b);
    Poly prod(2 * _k, 0);
    for (unsigned i = 0; i < _k; ++i) {
      for (unsigned j = 0; j < _k; ++j) {
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % _p;
      }
    }
    Poly m = _modulus;
    m.push_back(1);
    return from_coefficients(poly_mod(prod, m, _p));
  }

}  // namespace gk::oracle
