#include <doctest.h>

#include <random>

#include "gk/oracle/finite_field.hpp"
#include "gk/oracle/matrix_group.hpp"
#include "gk/oracle/permutations.hpp"
#include "gk/catalog.hpp"

using namespace gk;
using namespace gk::oracle;

TEST_CASE("finite field construction") {
  FiniteField f4(2, 2);
  CHECK(f4.order() == 4);
  CHECK(f4.modulus_string() == "x^2+x+1");
  FiniteField f27(3, 3);
  CHECK(f27.element_order(f27.generator()) == 26);
  FiniteField f9(3, 2);
  CHECK(f9.modulus_string() == "x^2+1");
  CHECK(FiniteField(7, 1).modulus_string() == "x");
  CHECK_THROWS_AS(FiniteField(4, 1), BoundsError);
  CHECK_THROWS_AS(FiniteField(2, 7), BoundsError);
  CHECK_THROWS_AS(FiniteField(257, 2), BoundsError);
  CHECK_THROWS_AS(FiniteField(2, 0), BoundsError);
}

TEST_CASE("field axioms on several fields") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {2, 2}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {13, 1}, {2, 6}, {31, 2}}) {
    FiniteField f(p, k);
    CAPTURE(f.order());
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      auto x = static_cast<FieldElem>(a);
      CHECK(f.pow(x, f.order() - 1) == 1);
      CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.add(x, f.neg(x)) == 0);
    }
    // Table arithmetic against coefficient arithmetic.
    std::mt19937 rng(p * 100 + k);
    for (int i = 0; i < 2000; ++i) {
      auto a = static_cast<FieldElem>(rng() % f.order());
      auto b = static_cast<FieldElem>(rng() % f.order());
      auto c = static_cast<FieldElem>(rng() % f.order());
      CHECK(f.mul(a, b) == f.mul_polynomial(a, b));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      // Frobenius is additive and multiplicative.
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
    }
  }
  CHECK_THROWS_AS(FiniteField(5, 1).inv(0), DomainError);
}

TEST_CASE("SL2 closures reach q(q^2-1)") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {5, 1}, {7, 1}, {3, 2}, {13, 1}, {37, 1}}) {
    auto g = special_linear_2(p, k);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
    }
    CAPTURE(q);
    CHECK(g.size() == q * (q * q - 1));
    CHECK(g.centre().size() == (p == 2 ? 1 : 2));
  }
}

TEST_CASE("SU3 closures") {
  auto g3 = special_unitary(3, 3, 1);
  CHECK(g3.size() == 6048);
  CHECK(g3.centre().size() == 1);
  ClosureOptions proj;
  proj.projective = true;
  auto g5 = special_unitary(3, 5, 1, proj);
  CHECK(g5.size() == 126000);
  CHECK(g5.centre().size() == 3);
}

TEST_CASE("spectrum_mod_center examples and formula agreement") {
  auto l27 = spectrum_mod_center(special_linear_2(7, 1));
  CHECK(l27.mu == make_nat_set({3, 4, 7}));
  CHECK(l27.source == SpectrumSource::Oracle);
  CHECK(spectrum_mod_center(special_unitary(3, 3, 1)).mu == make_nat_set({7, 8, 12}));
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
    auto sp = spectrum_mod_center(special_linear_2(p, k));
    CHECK(sp.mu == mu_L2(p, k).mu);
    CHECK(is_antichain(sp.mu));
  }
}

TEST_CASE("oracle spectrum primes equal the primes of the quotient order") {
  ClosureOptions proj;
  proj.projective = true;
  auto g  = special_unitary(3, 5, 1, proj);
  auto sp = spectrum_mod_center(g);
  CHECK(sp.mu == mu_U3(5).mu);
  CHECK(spectrum_primes(sp.mu) == prime_support(Nat(g.size())));
}

TEST_CASE("exponent-path order equals naive iteration") {
  auto            g = special_unitary(3, 3, 1);
  Nat const       e = g.exponent_bound();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    Matrix m = g.element(rng() % g.size());
    CHECK(projective_order_from_exponent(g.algebra(), m, e)
          == projective_order_naive(g.algebra(), m));
  }
}

TEST_CASE("closure failures") {
  MatrixAlgebra alg(FiniteField(5, 1), 2, Form::Special);
  Matrix        u = alg.identity(), l = alg.identity();
  u.at(0, 1) = 1;
  l.at(1, 0) = 1;
  // Target too small: the closure overshoots.
  CHECK_THROWS_AS(MatrixGroup::closure(alg, {u, l}, 60), ConsistencyError);
  // Determinant 2 violates the form.
  Matrix d = alg.identity();
  d.at(0, 0) = 2;
  CHECK_THROWS_AS(MatrixGroup::closure(alg, {d}, 120), ConsistencyError);
  ClosureOptions small;
  small.max_order = 100;
  CHECK_THROWS_AS(MatrixGroup::closure(alg, {u, l}, 120, small), BoundsError);
  // A target that can never be reached exhausts the retries.
  ClosureOptions few;
  few.retry_limit = 2;
  CHECK_THROWS_AS(MatrixGroup::closure(alg, {u, l}, 240, few), ConsistencyError);
}

TEST_CASE("closure retries from a deficient generating set") {
  MatrixAlgebra alg(FiniteField(7, 1), 2, Form::Special);
  Matrix        u = alg.identity();
  u.at(0, 1)      = 1;
  auto a = MatrixGroup::closure(alg, {u}, 336);
  CHECK(a.size() == 336);
  CHECK(a.retries_used() >= 1);
  auto b = MatrixGroup::closure(alg, {u}, 336);
  CHECK(a.retries_used() == b.retries_used());
  CHECK(a.generators() == b.generators());
}

TEST_CASE("matrix algebra basics") {
  MatrixAlgebra alg(FiniteField(3, 2), 3, Form::Unitary);
  CHECK(alg.form_q() == 3);
  CHECK(alg.packable());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Matrix m = alg.random_element(rng);
    CHECK(alg.preserves_form(m));
    CHECK(alg.unpack(alg.pack(m)) == m);
    CHECK(alg.det(m) == 1);
  }
  CHECK_THROWS_AS(MatrixAlgebra(FiniteField(3, 1), 3, Form::Unitary), BoundsError);
  CHECK_THROWS_AS(MatrixAlgebra(FiniteField(3, 1), 3, Form::Symplectic), BoundsError);
  MatrixAlgebra sp(FiniteField(5, 1), 4, Form::Symplectic);
  for (int i = 0; i < 50; ++i) {
    CHECK(sp.preserves_form(sp.random_element(rng)));
  }
}

TEST_CASE("alternating brute force") {
  CHECK(alternating_spectrum_bruteforce(5).mu == make_nat_set({2, 3, 5}));
  CHECK(alternating_spectrum_bruteforce(7).mu == make_nat_set({4, 5, 6, 7}));
  CHECK(alternating_spectrum_bruteforce(10).mu == make_nat_set({8, 9, 10, 12, 15, 21}));
  for (unsigned n = 5; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(alternating_omega_bruteforce(n) == omega_alternating(n));
    CHECK(alternating_spectrum_bruteforce(n).mu == mu_alternating(n).mu);
  }
  CHECK(alternating_spectrum_bruteforce(5).mu == mu_L2(2, 2).mu);
  CHECK_THROWS_AS(alternating_omega_bruteforce(4), BoundsError);
  CHECK_THROWS_AS(alternating_omega_bruteforce(11), BoundsError);
  CHECK(permutation_order({1, 2, 0, 4, 3}) == 6);
}
