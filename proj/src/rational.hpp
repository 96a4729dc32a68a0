#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gkm {

// Exact rational arithmetic on 64-bit numerator/denominator.  All the
// quantities this library produces (localizations, structure constants,
// averaged polynomials) stay far below the 2^63 guard; if a computation ever
// left that range the checked narrowing below throws instead of wrapping, so
// exactness is never silently lost.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    // Fast path for the overwhelmingly common integer case.
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t n;
      if (!__builtin_add_overflow(a.num_, b.num_, &n)) return Rational(n);
    }
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t n;
      if (!__builtin_sub_overflow(a.num_, b.num_, &n)) return Rational(n);
    }
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t n;
      if (!__builtin_mul_overflow(a.num_, b.num_, &n)) return Rational(n);
    }
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    if (a.den_ == 1 && b.den_ == 1 && b.num_ != -1 && a.num_ % b.num_ == 0) {
      return Rational(a.num_ / b.num_);
    }
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  using i128 = __int128;

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic exceeded 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = make(num_, den_); }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace gkm
