#pragma once

// Slow, transparent reference implementations the tests check the library
// against: closed-form orders, brute-force subword sums over all 2^l subsets,
// and Bruhat comparison by the subword property.  Nothing here shares code
// with the library paths under test beyond the core root-system types.

#include <cstdint>
#include <vector>

#include "poly.hpp"
#include "roots.hpp"

namespace oracle {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

inline std::uint64_t group_order(gkm::Family f, int rank) {
  switch (f) {
    case gkm::Family::A:
      return factorial(rank + 1);
    case gkm::Family::B:
    case gkm::Family::C:
      return factorial(rank) << rank;
    case gkm::Family::D:
      return factorial(rank) << (rank - 1);
  }
  return 0;
}

inline int positive_root_count(gkm::Family f, int rank) {
  switch (f) {
    case gkm::Family::A:
      return rank * (rank + 1) / 2;
    case gkm::Family::B:
    case gkm::Family::C:
      return rank * rank;
    case gkm::Family::D:
      return rank * (rank - 1);
  }
  return 0;
}

// Localization p_w(v) summed over every reduced subword of the given word
// for v, by checking all 2^l subsets.
inline gkm::Polynomial billey_sum(const gkm::RootSystem& R, const gkm::WeylElement& w,
                                  const std::vector<int>& v_word) {
  const int l = static_cast<int>(v_word.size());
  const int lw = R.length(w);
  // Rolled reflections: position j contributes s_{i1}..s_{i_{j-1}}(alpha_{i_j}).
  std::vector<gkm::Root> rolled(l);
  gkm::WeylElement prefix = R.identity();
  for (int j = 0; j < l; ++j) {
    rolled[j] = apply(prefix, R.alpha(v_word[j]));
    prefix = compose(prefix, R.simple(v_word[j]));
  }
  gkm::Polynomial total(R.ambient_dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    if (__builtin_popcountll(mask) != lw) continue;
    gkm::WeylElement prod = R.identity();
    for (int j = 0; j < l; ++j) {
      if (mask & (std::uint64_t{1} << j)) prod = compose(prod, R.simple(v_word[j]));
    }
    if (!(prod == w)) continue;
    gkm::Polynomial term = gkm::Polynomial::one(R.ambient_dim);
    for (int j = 0; j < l; ++j) {
      if (mask & (std::uint64_t{1} << j)) term = term * gkm::Polynomial::from_root(rolled[j]);
    }
    total += term;
  }
  return total;
}

inline gkm::Polynomial billey_sum(const gkm::RootSystem& R, const gkm::WeylElement& w,
                                  const gkm::WeylElement& v) {
  return billey_sum(R, w, R.canonical_word(v));
}

// Bruhat order by the subword property: u <= v iff some subset of a reduced
// word for v multiplies to u.
inline bool bruhat_leq(const gkm::RootSystem& R, const gkm::WeylElement& u,
                       const gkm::WeylElement& v) {
  std::vector<int> word = R.canonical_word(v);
  const int l = static_cast<int>(word.size());
  const int lu = R.length(u);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    if (__builtin_popcountll(mask) != lu) continue;
    gkm::WeylElement prod = R.identity();
    for (int j = 0; j < l; ++j) {
      if (mask & (std::uint64_t{1} << j)) prod = compose(prod, R.simple(word[j]));
    }
    if (prod == u) return true;
  }
  return false;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace oracle
