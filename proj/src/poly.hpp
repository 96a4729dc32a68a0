#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "roots.hpp"
#include "util.hpp"

namespace gkm {

// Sparse multivariate polynomial over the rationals in variables t_1..t_dim.
// Terms are kept sorted in graded-lex order, highest first: larger total
// degree wins, ties broken lexicographically on the exponent vector.  No zero
// coefficients are stored, so structural equality is value equality.
//
// Exponent vectors are packed into a single 64-bit key — total degree in the
// top byte, then seven bits per variable — so comparing or multiplying
// monomials is integer arithmetic.  That caps polynomials at 8 variables and
// total degree 127, far beyond any group this library can enumerate.
class Polynomial {
 public:
  using Term = std::pair<std::vector<int>, Rational>;
  struct PackedTerm {
    std::uint64_t key = 0;
    Rational coeff;

    bool operator==(const PackedTerm&) const = default;
  };

  static constexpr int kMaxVars = 8;
  static constexpr int kMaxDegree = 127;

  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) { check_dim(dim); }

  static Polynomial constant(int dim, const Rational& c);
  static Polynomial one(int dim) { return constant(dim, Rational(1)); }
  static Polynomial variable(int dim, int i);  // t_i, 1-based
  static Polynomial from_root(const Root& r);
  // Takes an unsorted, possibly duplicated term list.
  static Polynomial from_terms(int dim, std::vector<Term> terms);
  static Polynomial from_packed(int dim, std::vector<PackedTerm> terms);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<PackedTerm>& packed() const { return terms_; }
  std::vector<Term> terms() const;  // unpacked copy, for display and tests
  int degree() const;               // -1 for the zero polynomial
  std::optional<int> homogeneous_degree() const;
  Rational constant_term() const;
  bool is_constant() const;

  bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  // Graded-lex-descending term order (true when a comes before b).
  static bool term_before(const std::vector<int>& a, const std::vector<int>& b);

  static std::uint64_t pack(const std::vector<int>& e);
  static std::vector<int> unpack(std::uint64_t key, int dim);
  static int key_degree(std::uint64_t key) { return static_cast<int>(key >> 56); }
  // The packed monomial t_i (0-based variable index).
  static std::uint64_t unit_key(int i) {
    return (std::uint64_t{1} << 56) | (std::uint64_t{1} << (49 - 7 * i));
  }
  static int key_exponent(std::uint64_t key, int i) {
    return static_cast<int>((key >> (49 - 7 * i)) & 0x7f);
  }

 private:
  static void check_dim(int dim);
  Polynomial& add_scaled(const Polynomial& o, bool negate);

  friend Polynomial apply(const WeylElement& w, const Polynomial& p);

  int dim_ = 0;
  std::vector<PackedTerm> terms_;
};

// w acting by substitution t_i -> sign * t_{w(i)}; a ring homomorphism.
Polynomial apply(const WeylElement& w, const Polynomial& p);

// Substitute variable i -> forms[i] (polynomials over a possibly different
// variable set, all of equal dimension).
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& forms);

struct LinearDivision {
  bool divisible = false;
  Polynomial quotient;
  Polynomial remainder;  // the witness when not divisible
};

// Exact division by the linear form of a root.
LinearDivision divide_linear(const Polynomial& p, const Root& r);

// Fused (a - b) / r, skipping the intermediate difference polynomial.
LinearDivision divide_linear_diff(const Polynomial& a, const Polynomial& b, const Root& r);

// The operator f -> (f - s_i f)/alpha_i.  Always exact; a division failure
// here is a bug and raises std::logic_error.
Polynomial divided_difference(const RootSystem& R, int i, const Polynomial& f);

// Rewrite of a polynomial in the simple-root variables a_1..a_rank.  For
// family A the ambient span exceeds the root span; any part involving the
// invariant complement t_1+...+t_n is flagged rather than stored.
struct AlphaExpansion {
  int rank = 0;
  std::vector<Polynomial::Term> coeffs;  // exponent vectors of length rank
  bool residual_flag = false;

  bool all_nonnegative() const;
  std::string str() const;  // canonical text over a1..a_rank
};

AlphaExpansion alpha_expand(const Polynomial& p, const RootSystem& R);

// Canonical text: signed sum of terms like "2*t1^2*t2", rationals "p/q"
// (parenthesized when a monomial follows), graded-lex order.
std::string poly_text(const Polynomial& p, char var = 't');
std::string root_text(const Root& r);
Polynomial parse_polynomial(const std::string& text, int dim, char var = 't');

}  // namespace gkm
