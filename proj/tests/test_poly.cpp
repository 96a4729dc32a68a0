#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "poly.hpp"
#include "roots.hpp"
#include "util.hpp"

using namespace gkm;

namespace {

// Deterministic small random polynomials for the algebraic-law checks.
Polynomial random_poly(int dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Polynomial::Term> terms;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(dim);
    for (int& x : e) x = expo(rng);
    terms.emplace_back(e, Rational(num(rng), den(rng)));
  }
  return Polynomial::from_terms(dim, std::move(terms));
}

// Reassemble an alpha expansion as an honest polynomial in the t variables.
Polynomial reassemble(const AlphaExpansion& ex, const RootSystem& R) {
  Polynomial sum(R.ambient_dim);
  for (const auto& [e, c] : ex.coeffs) {
    Polynomial term = Polynomial::constant(R.ambient_dim, c);
    for (int i = 0; i < ex.rank; ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * Polynomial::from_root(R.alpha(i + 1));
    }
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("rationals normalize and obey field arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(7).is_integer());
  CHECK(!Rational(1, 2).is_integer());
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(5, 6) / Rational(5, 3)) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("monomial packing round-trips and orders by graded lex") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> expo(0, 9);
  for (int dim = 1; dim <= Polynomial::kMaxVars; ++dim) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> e(dim);
      for (int& x : e) x = expo(rng);
      std::uint64_t key = Polynomial::pack(e);
      CHECK(Polynomial::unpack(key, dim) == e);
      int total = 0;
      for (int x : e) total += x;
      CHECK(Polynomial::key_degree(key) == total);
      for (int i = 0; i < dim; ++i) CHECK(Polynomial::key_exponent(key, i) == e[i]);
    }
  }
  // Higher total degree first, then lexicographically larger exponent vector.
  CHECK(Polynomial::term_before({2, 0}, {1, 0}));
  CHECK(Polynomial::term_before({1, 1}, {0, 2}));
  CHECK(!Polynomial::term_before({0, 2}, {1, 1}));
  CHECK(!Polynomial::term_before({1, 0}, {1, 0}));
}

TEST_CASE("polynomial constructors and degree bookkeeping") {
  Polynomial zero(3);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.constant_term().is_zero());

  Polynomial t2 = Polynomial::variable(3, 2);
  CHECK(t2.degree() == 1);
  CHECK(t2.homogeneous_degree() == 1);
  CHECK(!t2.is_constant());

  Polynomial c = Polynomial::constant(3, Rational(5, 2));
  CHECK(c.is_constant());
  CHECK(c.constant_term() == Rational(5, 2));
  CHECK(c.homogeneous_degree() == 0);

  Polynomial mixed = t2 * t2 + c;
  CHECK(mixed.degree() == 2);
  CHECK(!mixed.homogeneous_degree().has_value());

  Root r{{1, 0, -1}};
  CHECK(Polynomial::from_root(r) ==
        Polynomial::variable(3, 1) - Polynomial::variable(3, 3));

  // Duplicate and cancelling terms collapse.
  Polynomial folded = Polynomial::from_terms(
      2, {{{1, 0}, Rational(1)}, {{1, 0}, Rational(-1)}, {{0, 1}, Rational(2)}});
  CHECK(folded == Polynomial::variable(2, 2).scaled(Rational(2)));

  CHECK_THROWS_AS(Polynomial(Polynomial::kMaxVars + 1), ResourceError);
}

TEST_CASE("polynomial arithmetic satisfies the ring laws") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 1 + trial % 4;
    Polynomial a = random_poly(dim, rng);
    Polynomial b = random_poly(dim, rng);
    Polynomial c = random_poly(dim, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == Polynomial(dim));
    CHECK(a * Polynomial::one(dim) == a);
    CHECK((a * Polynomial(dim)).is_zero());
    CHECK(a.scaled(Rational(1, 2)) + a.scaled(Rational(1, 2)) == a);
  }
}

TEST_CASE("polynomial text round-trips through the parser") {
  std::mt19937 rng(311);
  for (int trial = 0; trial < 60; ++trial) {
    int dim = 1 + trial % 5;
    Polynomial p = random_poly(dim, rng);
    CHECK(parse_polynomial(poly_text(p), dim) == p);
    CHECK(parse_polynomial(poly_text(p, 'a'), dim, 'a') == p);
  }
  CHECK(poly_text(Polynomial(4)) == "0");
  CHECK(parse_polynomial("0", 3).is_zero());
  CHECK(poly_text(parse_polynomial("t1 - t2", 2)) == "t1 - t2");
  // Fractional coefficients parenthesize before a monomial.
  Polynomial half = Polynomial::variable(2, 1).scaled(Rational(1, 2));
  CHECK(poly_text(half) == "(1/2)*t1");
  CHECK(parse_polynomial("(1/2)*t1", 2) == half);
  CHECK(parse_polynomial("1/2*t1", 2) == half);
  CHECK(parse_polynomial("t1^2*t2 + 3", 2) ==
        Polynomial::from_terms(2, {{{2, 1}, Rational(1)}, {{0, 0}, Rational(3)}}));
  CHECK_THROWS_AS(parse_polynomial("t1 +", 2), UsageError);
  CHECK_THROWS_AS(parse_polynomial("t9", 2), UsageError);
  CHECK_THROWS_AS(parse_polynomial("x1", 2), UsageError);
  CHECK_THROWS_AS(parse_polynomial("t1 ** 2", 2), UsageError);
}

TEST_CASE("weyl substitution is a ring homomorphism") {
  RootSystem B2 = build_root_system(Family::B, 2);
  std::vector<WeylElement> group = enumerate_group(B2, Limits{});
  std::mt19937 rng(555);
  for (const WeylElement& w : group) {
    Polynomial p = random_poly(2, rng);
    Polynomial q = random_poly(2, rng);
    CHECK(apply(w, p + q) == apply(w, p) + apply(w, q));
    CHECK(apply(w, p * q) == apply(w, p) * apply(w, q));
    for (const WeylElement& v : group) {
      CHECK(apply(compose(w, v), p) == apply(w, apply(v, p)));
    }
  }
  Polynomial fixed = random_poly(2, rng);
  CHECK(apply(B2.identity(), fixed) == fixed);
  // The sign generator really flips the last coordinate.
  Polynomial t2 = Polynomial::variable(2, 2);
  CHECK(apply(B2.simple(2), t2) == -t2);
}

TEST_CASE("linear division is exact exactly when it should be") {
  RootSystem A3 = build_root_system(Family::A, 3);
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const Root& r = A3.positive_roots[trial % A3.positive_roots.size()];
    Polynomial q = random_poly(4, rng);
    Polynomial p = q * Polynomial::from_root(r);
    LinearDivision d = divide_linear(p, r);
    CHECK(d.divisible);
    CHECK(d.quotient == q);
    CHECK(d.remainder.is_zero());
    // Fused difference form agrees with dividing the plain difference.
    Polynomial a = random_poly(4, rng);
    Polynomial b = random_poly(4, rng);
    LinearDivision lhs = divide_linear_diff(a, b, r);
    LinearDivision rhs = divide_linear(a - b, r);
    CHECK(lhs.divisible == rhs.divisible);
    if (lhs.divisible) {
      CHECK(lhs.quotient == rhs.quotient);
    }
    // Either way the data reassembles the dividend.
    Polynomial back = lhs.quotient * Polynomial::from_root(r) + lhs.remainder;
    CHECK(back == a - b);
  }
  // A polynomial constant in the root direction is not divisible.
  Root a1 = A3.alpha(1);
  LinearDivision bad = divide_linear(Polynomial::variable(4, 3), a1);
  CHECK(!bad.divisible);
  CHECK(!bad.remainder.is_zero());
}

TEST_CASE("divided differences obey degree drop, twisted Leibniz, and vanishing square") {
  RootSystem A3 = build_root_system(Family::A, 3);
  Polynomial p = parse_polynomial("t1^2 - t1*t2 - t1*t3 + t2*t3", 4);  // (t1-t2)(t1-t3)
  CHECK(divided_difference(A3, 1, p) == parse_polynomial("t1 + t2 - 2*t3", 4));
  std::mt19937 rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    int i = 1 + trial % 3;
    Polynomial f = random_poly(4, rng);
    Polynomial g = random_poly(4, rng);
    Polynomial df = divided_difference(A3, i, f);
    // The result is invariant under the defining reflection.
    CHECK(apply(A3.simple(i), df) == df);
    CHECK(divided_difference(A3, i, df).is_zero());
    // Twisted Leibniz rule.
    Polynomial prod = divided_difference(A3, i, f * g);
    CHECK(prod == df * g + apply(A3.simple(i), f) * divided_difference(A3, i, g));
    // Symmetric polynomials are annihilated.
    Polynomial sym = f * apply(A3.simple(i), f);
    CHECK(divided_difference(A3, i, sym).is_zero());
  }
}

TEST_CASE("substitution composes with evaluation") {
  // Substituting the root forms for fresh variables inverts alpha expansion.
  RootSystem C2 = build_root_system(Family::C, 2);
  std::vector<Polynomial> forms = {Polynomial::from_root(C2.alpha(1)),
                                   Polynomial::from_root(C2.alpha(2))};
  std::mt19937 rng(131);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial in_a = random_poly(2, rng);  // read as a polynomial in a1, a2
    Polynomial in_t = substitute(in_a, forms);
    AlphaExpansion ex = alpha_expand(in_t, C2);
    CHECK(!ex.residual_flag);
    CHECK(Polynomial::from_terms(2, ex.coeffs) == in_a);
  }
}

TEST_CASE("alpha expansion recognizes the root span and flags its complement") {
  RootSystem A2 = build_root_system(Family::A, 2);
  // t1 is not in the span of a1, a2; the invariant line is flagged.
  AlphaExpansion stray = alpha_expand(Polynomial::variable(3, 1), A2);
  CHECK(stray.residual_flag);

  AlphaExpansion clean = alpha_expand(parse_polynomial("2/3*t1 - 1/3*t2 - 1/3*t3", 3), A2);
  CHECK(!clean.residual_flag);
  CHECK(Polynomial::from_terms(2, clean.coeffs) ==
        Polynomial::from_terms(2, {{{1, 0}, Rational(2, 3)}, {{0, 1}, Rational(1, 3)}}));
  CHECK(clean.all_nonnegative());
  CHECK(clean.str() == "(2/3)*a1 + (1/3)*a2");
  CHECK(reassemble(clean, A2) == parse_polynomial("2/3*t1 - 1/3*t2 - 1/3*t3", 3));

  // In the other families the t variables already lie in the root span.
  RootSystem B2 = build_root_system(Family::B, 2);
  AlphaExpansion b = alpha_expand(Polynomial::variable(2, 1), B2);
  CHECK(!b.residual_flag);
  CHECK(Polynomial::from_terms(2, b.coeffs) ==
        Polynomial::from_terms(2, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}}));

  RootSystem C2 = build_root_system(Family::C, 2);
  AlphaExpansion c = alpha_expand(Polynomial::variable(2, 1), C2);
  CHECK(!c.residual_flag);
  CHECK(Polynomial::from_terms(2, c.coeffs) ==
        Polynomial::from_terms(2, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1, 2)}}));

  AlphaExpansion neg = alpha_expand(-Polynomial::from_root(A2.alpha(1)), A2);
  CHECK(!neg.all_nonnegative());

  // Expansion of a random root-span polynomial reassembles exactly.
  std::mt19937 rng(424);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial in_a = random_poly(2, rng);
    Polynomial in_t = substitute(in_a, {Polynomial::from_root(A2.alpha(1)),
                                        Polynomial::from_root(A2.alpha(2))});
    AlphaExpansion ex = alpha_expand(in_t, A2);
    CHECK(!ex.residual_flag);
    CHECK(reassemble(ex, A2) == in_t);
  }
}
