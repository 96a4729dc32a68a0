#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rational.hpp"
#include "util.hpp"

namespace gkm {

enum class Family { A, B, C, D };

Family family_from_string(const std::string& s);
std::string family_name(Family f);

// A root as an integer vector in the ambient coordinates t_1..t_dim.
struct Root {
  std::vector<int> coords;

  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const { return coords < o.coords; }
  Root negated() const;
  // Sign of the first nonzero coordinate.  With the classical coordinate
  // choices below every positive root starts with a positive coordinate, so
  // this decides positivity for any vector in the root lattice image of W.
  int leading_sign() const;
};

struct RootHash {
  std::size_t operator()(const Root& r) const { return hash_ints(r.coords); }
};

// A signed permutation: images[i] = +-(j+1) encodes w(t_{i+1}) = +-t_j.
// Type A elements never produce signs; B/C/D do.
struct WeylElement {
  std::vector<int> images;

  static WeylElement identity(int dim);
  int dim() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return images < o.images; }
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const { return hash_ints(w.images); }
};

// compose(u, v) = u after v: (u*v)(x) = u(v(x)).
WeylElement compose(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);
Root apply(const WeylElement& w, const Root& r);

// A set of simple-root indices (1-based) cutting out a parabolic subgroup.
struct ParabolicJ {
  std::vector<int> indices;  // sorted, unique

  ParabolicJ() = default;
  ParabolicJ(std::vector<int> idx, int rank);
  bool contains(int i) const;
  bool empty() const { return indices.empty(); }
  bool operator==(const ParabolicJ&) const = default;
  std::string str() const;
};

class RootSystem {
 public:
  Family family;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Root> simple_roots;              // alpha_1..alpha_rank
  std::vector<Root> positive_roots;            // sorted
  std::vector<std::vector<int>> simple_coords; // positive_roots[k] in the alpha basis
  std::vector<WeylElement> simple_reflections;

  const Root& alpha(int i) const { return simple_roots.at(i - 1); }
  const WeylElement& simple(int i) const { return simple_reflections.at(i - 1); }
  WeylElement identity() const { return WeylElement::identity(ambient_dim); }

  bool is_positive_root(const Root& r) const;
  bool is_root(const Root& r) const;
  // Index into positive_roots, for either sign of r.
  int positive_index(const Root& r) const;
  // Coefficients of a positive root on the simple roots.
  const std::vector<int>& coords_on_simples(const Root& r) const;
  // The reflection s_r as a signed permutation.
  WeylElement reflection(const Root& r) const;

  int length(const WeylElement& w) const;
  bool is_left_descent(const WeylElement& w, int i) const;   // l(s_i w) < l(w)
  bool is_right_descent(const WeylElement& w, int i) const;  // l(w s_i) < l(w)
  std::vector<int> canonical_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word) const;
  WeylElement longest_element() const;
  // The index i' with w0 s_i w0^{-1} = s_{i'}.
  int w0_conjugate_index(int i) const;

  // Negative roots lying outside the Levi of the parabolic given by J.
  std::vector<Root> negative_roots_outside_levi(const ParabolicJ& J) const;
  bool in_levi_span(const Root& r, const ParabolicJ& J) const;

  // Inv^P(w): positive roots beta with w^{-1}(beta) negative and outside the
  // Levi span.  Sorted; deterministic.
  std::vector<Root> inversions(const WeylElement& w, const ParabolicJ& J) const;

  // Minimal-length representative of the coset w W_J.
  WeylElement minimal_rep(const WeylElement& w, const ParabolicJ& J) const;
  bool is_minimal_rep(const WeylElement& w, const ParabolicJ& J) const;

  std::string element_text(const WeylElement& w) const;  // "s2*s1" / "e"
  WeylElement parse_element(const std::string& text) const;

 private:
  friend RootSystem build_root_system(Family family, int rank);
  std::unordered_map<Root, int, RootHash> positive_index_;
};

RootSystem build_root_system(Family family, int rank);

struct Coset {
  WeylElement min_rep;
  int length = 0;  // l_P = |Inv^P(min_rep)|
};

// Whole group, sorted by (length, canonical word).  Throws ResourceError when
// the order would exceed limits.max_group_order.
std::vector<WeylElement> enumerate_group(const RootSystem& R, const Limits& limits);
// Minimal coset representatives W^J in the same order, without enumerating W.
std::vector<WeylElement> enumerate_min_reps(const RootSystem& R, const ParabolicJ& J,
                                            const Limits& limits);
// The parabolic subgroup W_J itself, same order.
std::vector<WeylElement> enumerate_parabolic(const RootSystem& R, const ParabolicJ& J,
                                             const Limits& limits);

bool bruhat_leq(const RootSystem& R, const WeylElement& u, const WeylElement& w);

struct ReducedWords {
  std::vector<int> canonical;
  std::vector<std::vector<int>> all;  // sorted lexicographically
};

// All reduced words; throws ResourceError when l(w) exceeds the word cap.
ReducedWords reduced_words(const RootSystem& R, const WeylElement& w, const Limits& limits);

}  // namespace gkm
