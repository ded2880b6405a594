#include "gk/oracle/matrix_group.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "gk/error.hpp"

namespace gk::oracle {

  namespace {

    // Open-addressing set of 64-bit keys; stores key + 1 so that 0 marks
    // an empty slot.
    class KeySet {
     public:
      explicit KeySet(std::uint64_t expected) {
        std::uint64_t cap = 16;
        while (cap < 2 * expected + 16) {
          cap <<= 1;
        }
        _slots.assign(cap, 0);
        _mask = cap - 1;
      }

      bool insert(std::uint64_t key) {
        std::uint64_t const stored = key + 1;
        std::uint64_t       h      = mix(key) & _mask;
        while (_slots[h] != 0) {
          if (_slots[h] == stored) {
            return false;
          }
          h = (h + 1) & _mask;
        }
        _slots[h] = stored;
        return true;
      }

     private:
      static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return x;
      }

      std::vector<std::uint64_t> _slots;
      std::uint64_t              _mask = 0;
    };

    unsigned bits_for(std::uint32_t q) {
      return static_cast<unsigned>(std::bit_width(q - 1));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // MatrixAlgebra
  ////////////////////////////////////////////////////////////////////////

  MatrixAlgebra::MatrixAlgebra(FiniteField field, unsigned dim, Form form)
      : _field(std::move(field)), _dim(dim), _form(form), _form_q(0) {
    if (dim < 1) {
      throw BoundsError("MatrixAlgebra: dimension must be positive");
    }
    if (form == Form::Unitary) {
      if (_field.degree() % 2 != 0) {
        throw BoundsError("MatrixAlgebra: unitary form needs a field of "
                          "square order");
      }
      _form_q = 1;
      for (unsigned i = 0; i < _field.degree() / 2; ++i) {
        _form_q *= _field.characteristic();
      }
    }
    if (form == Form::Symplectic && dim % 2 != 0) {
      throw BoundsError("MatrixAlgebra: symplectic form needs even dimension");
    }
    _bits               = bits_for(_field.order());
    unsigned const used = _bits * dim * dim;
    _packable           = used <= 64
                && !(used == 64 && _field.order() == (1u << _bits));
  }

  Matrix MatrixAlgebra::identity() const {
    return scalar(1);
  }

  Matrix MatrixAlgebra::scalar(FieldElem lambda) const {
    Matrix m{_dim, std::vector<FieldElem>(_dim * _dim, 0)};
    for (unsigned i = 0; i < _dim; ++i) {
      m.at(i, i) = lambda;
    }
    return m;
  }

  Matrix MatrixAlgebra::mul(Matrix const& a, Matrix const& b) const {
    Matrix out{_dim, std::vector<FieldElem>(_dim * _dim, 0)};
    for (unsigned i = 0; i < _dim; ++i) {
      for (unsigned j = 0; j < _dim; ++j) {
        FieldElem s = 0;
        for (unsigned l = 0; l < _dim; ++l) {
          s = _field.add(s, _field.mul(a.at(i, l), b.at(l, j)));
        }
        out.at(i, j) = s;
      }
    }
    return out;
  }

  Matrix MatrixAlgebra::pow(Matrix const& a, Nat const& e) const {
    Matrix result = identity();
    Matrix base   = a;
    Nat    rest   = e;
    while (rest != 0) {
      if ((rest & 1) != 0) {
        result = mul(result, base);
      }
      rest >>= 1;
      if (rest != 0) {
        base = mul(base, base);
      }
    }
    return result;
  }

  FieldElem MatrixAlgebra::det(Matrix const& a) const {
    Matrix    m   = a;
    FieldElem det = 1;
    for (unsigned c = 0; c < _dim; ++c) {
      unsigned pivot = c;
      while (pivot < _dim && m.at(pivot, c) == 0) {
        ++pivot;
      }
      if (pivot == _dim) {
        return 0;
      }
      if (pivot != c) {
        for (unsigned j = 0; j < _dim; ++j) {
          std::swap(m.at(pivot, j), m.at(c, j));
        }
        det = _field.neg(det);
      }
      FieldElem const d   = m.at(c, c);
      FieldElem const inv = _field.inv(d);
      det                 = _field.mul(det, d);
      for (unsigned r = c + 1; r < _dim; ++r) {
        FieldElem const f = _field.mul(m.at(r, c), inv);
        if (f == 0) {
          continue;
        }
        for (unsigned j = c; j < _dim; ++j) {
          m.at(r, j) = _field.sub(m.at(r, j), _field.mul(f, m.at(c, j)));
        }
      }
    }
    return det;
  }

  bool MatrixAlgebra::is_scalar(Matrix const& a) const {
    FieldElem const d = a.at(0, 0);
    for (unsigned i = 0; i < _dim; ++i) {
      for (unsigned j = 0; j < _dim; ++j) {
        if (a.at(i, j) != (i == j ? d : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  bool MatrixAlgebra::preserves_form(Matrix const& a) const {
    if (det(a) != 1) {
      return false;
    }
    switch (_form) {
      case Form::Special:
        return true;
      case Form::Unitary: {
        // conj(a)^T a == I
        for (unsigned i = 0; i < _dim; ++i) {
          for (unsigned j = 0; j < _dim; ++j) {
            FieldElem s = 0;
            for (unsigned l = 0; l < _dim; ++l) {
              s = _field.add(s, _field.mul(conj(a.at(l, i)), a.at(l, j)));
            }
            if (s != (i == j ? 1 : 0)) {
              return false;
            }
          }
        }
        return true;
      }
      case Form::Symplectic: {
        // a^T J a == J with J = [[0, I], [-I, 0]]
        unsigned const m     = _dim / 2;
        auto           gram  = [&](unsigned i, unsigned j) -> FieldElem {
          if (i < m && j == i + m) {
            return 1;
          }
          if (i >= m && j + m == i) {
            return _field.neg(1);
          }
          return 0;
        };
        for (unsigned i = 0; i < _dim; ++i) {
          for (unsigned j = 0; j < _dim; ++j) {
            FieldElem s = 0;
            for (unsigned r = 0; r < _dim; ++r) {
              for (unsigned c = 0; c < _dim; ++c) {
                FieldElem g = gram(r, c);
                if (g != 0) {
                  s = _field.add(
                      s, _field.mul(_field.mul(a.at(r, i), g), a.at(c, j)));
                }
              }
            }
            if (s != gram(i, j)) {
              return false;
            }
          }
        }
        return true;
      }
    }
    return false;
  }

  std::uint64_t MatrixAlgebra::pack(Matrix const& a) const {
    if (!_packable) {
      throw BoundsError("MatrixAlgebra: matrices do not fit a 64-bit key");
    }
    std::uint64_t key = 0;
    for (FieldElem e : a.entries) {
      key = (key << _bits) | e;
    }
    return key;
  }

  Matrix MatrixAlgebra::unpack(std::uint64_t key) const {
    Matrix              m{_dim, std::vector<FieldElem>(_dim * _dim, 0)};
    std::uint64_t const mask = (std::uint64_t{1} << _bits) - 1;
    for (std::size_t i = m.entries.size(); i-- > 0;) {
      m.entries[i] = static_cast<FieldElem>(key & mask);
      key >>= _bits;
    }
    return m;
  }

  Matrix MatrixAlgebra::random_element(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> any(0, _field.order() - 1);
    std::uniform_int_distribution<std::uint32_t> nonzero(1, _field.order() - 1);
    auto rand_elem = [&] { return static_cast<FieldElem>(any(rng)); };

    switch (_form) {
      case Form::Special: {
        for (;;) {
          Matrix m{_dim, std::vector<FieldElem>(_dim * _dim)};
          for (auto& e : m.entries) {
            e = rand_elem();
          }
          FieldElem d = det(m);
          if (d == 0) {
            continue;
          }
          FieldElem const inv = _field.inv(d);
          for (unsigned j = 0; j < _dim; ++j) {
            m.at(0, j) = _field.mul(m.at(0, j), inv);
          }
          return m;
        }
      }
      case Form::Unitary: {
        // Columns sampled one at a time: unit norm and orthogonal to the
        // columns already chosen.
        auto herm = [&](std::vector<FieldElem> const& u,
                        std::vector<FieldElem> const& v) {
          FieldElem s = 0;
          for (unsigned i = 0; i < _dim; ++i) {
            s = _field.add(s, _field.mul(conj(u[i]), v[i]));
          }
          return s;
        };
        std::vector<std::vector<FieldElem>> cols;
        while (cols.size() < _dim) {
          std::vector<FieldElem> v(_dim);
          for (auto& e : v) {
            e = rand_elem();
          }
          if (herm(v, v) != 1) {
            continue;
          }
          bool orth = std::all_of(cols.begin(), cols.end(),
                                  [&](auto const& u) { return herm(u, v) == 0; });
          if (orth) {
            cols.push_back(std::move(v));
          }
        }
        Matrix m{_dim, std::vector<FieldElem>(_dim * _dim)};
        for (unsigned j = 0; j < _dim; ++j) {
          for (unsigned i = 0; i < _dim; ++i) {
            m.at(i, j) = cols[j][i];
          }
        }
        FieldElem const inv = _field.inv(det(m));
        for (unsigned i = 0; i < _dim; ++i) {
          m.at(i, _dim - 1) = _field.mul(m.at(i, _dim - 1), inv);
        }
        return m;
      }
      case Form::Symplectic: {
        // Product of random symplectic transvections
        // x -> x + a * B(x, v) * v, i.e. I + a * v (Jv)^T.
        unsigned const m      = _dim / 2;
        Matrix         result = identity();
        for (unsigned t = 0; t <= _dim; ++t) {
          std::vector<FieldElem> v(_dim);
          do {
            for (auto& e : v) {
              e = rand_elem();
            }
          } while (std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; }));
          std::vector<FieldElem> jv(_dim);
          for (unsigned i = 0; i < m; ++i) {
            jv[i]     = v[i + m];
            jv[i + m] = _field.neg(v[i]);
          }
          FieldElem const a = static_cast<FieldElem>(nonzero(rng));
          Matrix          tr = identity();
          for (unsigned i = 0; i < _dim; ++i) {
            for (unsigned j = 0; j < _dim; ++j) {
              tr.at(i, j) = _field.add(tr.at(i, j),
                                       _field.mul(a, _field.mul(v[i], jv[j])));
            }
          }
          result = mul(result, tr);
        }
        return result;
      }
    }
    return identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // MatrixGroup
  ////////////////////////////////////////////////////////////////////////

  MatrixGroup MatrixGroup::closure(MatrixAlgebra         algebra,
                                   std::vector<Matrix>   generators,
                                   Nat const&            target_order,
                                   ClosureOptions const& options) {
    MatrixGroup g(std::move(algebra));
    auto const& alg = g._algebra;
    if (!alg.packable()) {
      throw BoundsError("closure: matrices of this size and field do not fit "
                        "the 64-bit element encoding");
    }
    for (auto const& m : generators) {
      if (m.dim != alg.dim() || !alg.preserves_form(m)) {
        throw ConsistencyError("closure: generator does not preserve the form");
      }
    }
    for (std::uint32_t l = 1; l < alg.field().order(); ++l) {
      Matrix s = alg.scalar(static_cast<FieldElem>(l));
      if (alg.preserves_form(s)) {
        g._centre.push_back(static_cast<FieldElem>(l));
      }
    }
    g._projective = options.projective;
    Nat target    = target_order;
    if (g._projective) {
      if (target % g._centre.size() != 0) {
        throw ConsistencyError("closure: centre order does not divide target");
      }
      target /= g._centre.size();
    }
    if (target > options.max_order) {
      throw BoundsError("closure: target order " + to_string(target)
                        + " exceeds the configured maximum "
                        + std::to_string(options.max_order));
    }
    std::uint64_t const want = static_cast<std::uint64_t>(target);

    auto key_of = [&](Matrix const& m) {
      if (!g._projective) {
        return alg.pack(m);
      }
      std::uint64_t best = ~std::uint64_t{0};
      for (FieldElem l : g._centre) {
        Matrix scaled = m;
        for (auto& e : scaled.entries) {
          e = alg.field().mul(e, l);
        }
        best = std::min(best, alg.pack(scaled));
      }
      return best;
    };

    std::mt19937_64 rng(options.seed);
    g._generators = std::move(generators);
    if (g._generators.empty()) {
      g._generators.push_back(alg.random_element(rng));
    }
    for (unsigned attempt = 0;; ++attempt) {
      g._elements.clear();
      g._elements.reserve(want);
      KeySet seen(want);
      auto   id = key_of(alg.identity());
      seen.insert(id);
      g._elements.push_back(id);
      for (std::size_t i = 0; i < g._elements.size(); ++i) {
        Matrix const x = alg.unpack(g._elements[i]);
        for (auto const& gen : g._generators) {
          std::uint64_t k = key_of(alg.mul(x, gen));
          if (seen.insert(k)) {
            g._elements.push_back(k);
            if (g._elements.size() > want) {
              throw ConsistencyError(
                  "closure: exceeded target order " + to_string(target)
                  + "; a generator is outside the intended group");
            }
          }
        }
      }
      if (g._elements.size() == want) {
        g._retries = attempt;
        return g;
      }
      if (attempt == options.retry_limit) {
        throw ConsistencyError(
            "closure: reached " + std::to_string(g._elements.size()) + " of "
            + to_string(target) + " elements after "
            + std::to_string(options.retry_limit) + " retries");
      }
      g._generators.push_back(alg.random_element(rng));
    }
  }

  Nat MatrixGroup::exponent_bound() const {
    auto const&   f = _algebra.field();
    std::uint64_t p = f.characteristic();
    Nat           unipotent = 1;
    while (unipotent < _algebra.dim()) {
      unipotent *= p;
    }
    Nat l = 1;
    Nat Q = f.order();
    Nat qi = 1;
    for (unsigned i = 1; i <= _algebra.dim(); ++i) {
      qi *= Q;
      l = boost::multiprecision::lcm(l, qi - 1);
    }
    return unipotent * l;
  }

  std::uint64_t projective_order_naive(MatrixAlgebra const& alg,
                                       Matrix const&        a) {
    Matrix        power = a;
    std::uint64_t k     = 1;
    while (!alg.is_scalar(power)) {
      power = alg.mul(power, a);
      ++k;
    }
    return k;
  }

  Nat projective_order_from_exponent(MatrixAlgebra const& alg,
                                     Matrix const&        a,
                                     Nat const&           exponent) {
    if (!alg.is_scalar(alg.pow(a, exponent))) {
      throw DomainError("projective_order_from_exponent: exponent is not a "
                        "multiple of the order");
    }
    Nat                 k  = exponent;
    Factorization const fe = full_factorization(exponent);
    for (auto const& f : fe.factors()) {
      while (k % f.prime == 0 && alg.is_scalar(alg.pow(a, k / f.prime))) {
        k /= f.prime;
      }
    }
    return k;
  }

  Spectrum spectrum_mod_center(MatrixGroup const& g) {
    std::set<std::uint64_t> orders;
    for (std::size_t i = 0; i < g.size(); ++i) {
      orders.insert(projective_order_naive(g.algebra(), g.element(i)));
    }
    std::vector<Nat> values(orders.begin(), orders.end());
    return {maximal_under_divisibility(std::move(values)), SpectrumSource::Oracle};
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard groups
  ////////////////////////////////////////////////////////////////////////

  Nat order_SL(unsigned n, Nat const& q) {
    Nat out = pow(q, n * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i) {
      out *= pow(q, i) - 1;
    }
    return out;
  }

  Nat order_SU(unsigned n, Nat const& q) {
    Nat out = pow(q, n * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i) {
      out *= (i % 2 == 0) ? pow(q, i) - 1 : pow(q, i) + 1;
    }
    return out;
  }

  Nat order_Sp(unsigned dim, Nat const& q) {
    unsigned const m   = dim / 2;
    Nat            out = pow(q, m * m);
    for (unsigned i = 1; i <= m; ++i) {
      out *= pow(q, 2 * i) - 1;
    }
    return out;
  }

  MatrixGroup special_linear_2(std::uint32_t p, unsigned k,
                               ClosureOptions const& options) {
    MatrixAlgebra alg(FiniteField(p, k), 2, Form::Special);
    auto const&   f = alg.field();
    Matrix        upper = alg.identity(), lower = alg.identity();
    upper.at(0, 1)      = 1;
    lower.at(1, 0)      = 1;
    std::vector<Matrix> gens = {upper, lower};
    if (k > 1) {
      Matrix d   = alg.identity();
      d.at(0, 0) = f.generator();
      d.at(1, 1) = f.inv(f.generator());
      gens.push_back(d);
    }
    Nat target = order_SL(2, pow(Nat(p), k));
    return MatrixGroup::closure(std::move(alg), std::move(gens), target, options);
  }

  MatrixGroup special_unitary(unsigned n, std::uint32_t p, unsigned k,
                              ClosureOptions const& options) {
    MatrixAlgebra   alg(FiniteField(p, 2 * k), n, Form::Unitary);
    std::mt19937_64 rng(options.seed);
    std::vector<Matrix> gens = {alg.random_element(rng), alg.random_element(rng)};
    Nat target = order_SU(n, pow(Nat(p), k));
    ClosureOptions opts = options;
    opts.seed           = options.seed + 1;
    return MatrixGroup::closure(std::move(alg), std::move(gens), target, opts);
  }

  MatrixGroup symplectic(unsigned dim, std::uint32_t p, unsigned k,
                         ClosureOptions const& options) {
    MatrixAlgebra   alg(FiniteField(p, k), dim, Form::Symplectic);
    std::mt19937_64 rng(options.seed);
    std::vector<Matrix> gens = {alg.random_element(rng), alg.random_element(rng)};
    Nat target = order_Sp(dim, pow(Nat(p), k));
    ClosureOptions opts = options;
    opts.seed           = options.seed + 1;
    return MatrixGroup::closure(std::move(alg), std::move(gens), target, opts);
  }

}  // namespace gk::oracle
