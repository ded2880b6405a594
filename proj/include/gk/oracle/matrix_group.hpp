// Brute-force matrix groups over finite fields: breadth-first closure
// certified against a known group order, and element orders modulo the
// scalar centre.

#ifndef GK_ORACLE_MATRIX_GROUP_HPP_
#define GK_ORACLE_MATRIX_GROUP_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gk/arith.hpp"
#include "gk/oracle/finite_field.hpp"
#include "gk/spectra.hpp"

namespace gk::oracle {

  inline constexpr std::uint64_t kDefaultSeed = 0xA11CE;

  // Square matrix, row-major.
  struct Matrix {
    unsigned               dim = 0;
    std::vector<FieldElem> entries;

    FieldElem& at(unsigned r, unsigned c) {
      return entries[r * dim + c];
    }
    FieldElem at(unsigned r, unsigned c) const {
      return entries[r * dim + c];
    }
    bool operator==(Matrix const&) const = default;
  };

  // The bilinear or sesquilinear form preserved by the group, together
  // with det = 1.
  enum class Form {
    Special,     // SL_n(q) over F_q
    Unitary,     // SU_n(q) over F_{q^2}, Gram matrix I, conjugation x^q
    Symplectic,  // Sp_{2m}(q) over F_q, Gram [[0, I], [-I, 0]]
  };

  struct ClosureOptions {
    std::uint64_t max_order   = 10'000'000;
    unsigned      retry_limit = 8;
    std::uint64_t seed        = kDefaultSeed;
    // Store one representative per coset of the scalar centre; the closure
    // is then certified against target_order / |centre|.
    bool projective = false;
  };

  // Matrix arithmetic over one field and dimension, plus the form test.
  class MatrixAlgebra {
   public:
    MatrixAlgebra(FiniteField field, unsigned dim, Form form);

    FiniteField const& field() const noexcept {
      return _field;
    }
    unsigned dim() const noexcept {
      return _dim;
    }
    Form form() const noexcept {
      return _form;
    }
    // q for the unitary form (the field has q^2 elements).
    std::uint32_t form_q() const noexcept {
      return _form_q;
    }

    Matrix    identity() const;
    Matrix    scalar(FieldElem lambda) const;
    Matrix    mul(Matrix const& a, Matrix const& b) const;
    Matrix    pow(Matrix const& a, Nat const& e) const;
    FieldElem det(Matrix const& a) const;
    bool      is_scalar(Matrix const& a) const;
    bool      preserves_form(Matrix const& a) const;  // includes det == 1

    // Packing into a 64-bit key for hashing.
    bool          packable() const noexcept {
      return _packable;
    }
    std::uint64_t pack(Matrix const& a) const;
    Matrix        unpack(std::uint64_t key) const;

    Matrix random_element(std::mt19937_64& rng) const;

   private:
    FieldElem conj(FieldElem a) const {
      return _form == Form::Unitary ? _field.pow(a, _form_q) : a;
    }

    FiniteField   _field;
    unsigned      _dim;
    Form          _form;
    std::uint32_t _form_q;
    unsigned      _bits;
    bool          _packable;
  };

  class MatrixGroup {
   public:
    // Breadth-first closure of the generators. Succeeds iff the closure
    // reaches target_order (divided by |centre| when projective); on
    // undershoot, seeded random form-preserving generators are added and
    // the closure restarts, up to options.retry_limit times.
    // ConsistencyError on overshoot or a generator violating the form;
    // BoundsError when the target exceeds options.max_order.
    static MatrixGroup closure(MatrixAlgebra          algebra,
                               std::vector<Matrix>    generators,
                               Nat const&             target_order,
                               ClosureOptions const&  options = {});

    MatrixAlgebra const& algebra() const noexcept {
      return _algebra;
    }
    std::vector<Matrix> const& generators() const noexcept {
      return _generators;
    }
    bool projective() const noexcept {
      return _projective;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    Matrix element(std::size_t i) const {
      return _algebra.unpack(_elements[i]);
    }
    // Scalars lambda with lambda*I in the group.
    std::vector<FieldElem> const& centre() const noexcept {
      return _centre;
    }
    unsigned retries_used() const noexcept {
      return _retries;
    }

    // Exponent bound: every element order in GL_n(F) divides
    // p^ceil(log_p n) * lcm(|F|^i - 1, i = 1..n).
    Nat exponent_bound() const;

   private:
    MatrixGroup(MatrixAlgebra algebra) : _algebra(std::move(algebra)) {}

    MatrixAlgebra              _algebra;
    std::vector<Matrix>        _generators;
    std::vector<std::uint64_t> _elements;
    std::vector<FieldElem>     _centre;
    bool                       _projective = false;
    unsigned                   _retries    = 0;
  };

  // Least k >= 1 with a^k scalar, by iterating powers.
  std::uint64_t projective_order_naive(MatrixAlgebra const& alg, Matrix const& a);
  // Same value, by stripping primes from a known multiple of the order
  // using repeated squaring.
  Nat projective_order_from_exponent(MatrixAlgebra const& alg,
                                     Matrix const&        a,
                                     Nat const&           exponent);

  // mu of the central quotient: maximal elements of the set of projective
  // element orders over the whole group.
  Spectrum spectrum_mod_center(MatrixGroup const& g);

  // |SL_n(q)|, |SU_n(q)|, |Sp_{2m}(q)|.
  Nat order_SL(unsigned n, Nat const& q);
  Nat order_SU(unsigned n, Nat const& q);
  Nat order_Sp(unsigned dim, Nat const& q);

  // Standard oracle groups. SL_2 starts from the two elementary
  // transvections (plus a diagonal element when q is not prime); SU_n and
  // Sp_{2m} start from seeded random form-preserving elements.
  MatrixGroup special_linear_2(std::uint32_t p, unsigned k, ClosureOptions const& = {});
  MatrixGroup special_unitary(unsigned n, std::uint32_t p, unsigned k, ClosureOptions const& = {});
  MatrixGroup symplectic(unsigned dim, std::uint32_t p, unsigned k, ClosureOptions const& = {});

}  // namespace gk::oracle

#endif  // GK_ORACLE_MATRIX_GROUP_HPP_
