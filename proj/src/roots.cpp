#include "roots.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace gkm {

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw UsageError("unknown family '" + s + "' (expected A, B, C or D)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Root Root::negated() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

int Root::leading_sign() const {
  for (int c : coords)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

WeylElement WeylElement::identity(int dim) {
  WeylElement w;
  w.images.resize(dim);
  for (int i = 0; i < dim; ++i) w.images[i] = i + 1;
  return w;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (images[i] != i + 1) return false;
  return true;
}

WeylElement compose(const WeylElement& u, const WeylElement& v) {
  assert(u.dim() == v.dim());
  WeylElement w;
  w.images.resize(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    int m = v.images[i];
    int target = u.images[std::abs(m) - 1];
    w.images[i] = m > 0 ? target : -target;
  }
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement r;
  r.images.resize(w.dim());
  for (int i = 0; i < w.dim(); ++i) {
    int m = w.images[i];
    int j = std::abs(m) - 1;
    r.images[j] = m > 0 ? i + 1 : -(i + 1);
  }
  return r;
}

Root apply(const WeylElement& w, const Root& r) {
  assert(w.dim() == static_cast<int>(r.coords.size()));
  Root out;
  out.coords.assign(r.coords.size(), 0);
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    int c = r.coords[i];
    if (c == 0) continue;
    int m = w.images[i];
    out.coords[std::abs(m) - 1] += m > 0 ? c : -c;
  }
  return out;
}

ParabolicJ::ParabolicJ(std::vector<int> idx, int rank) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 1 || i > rank)
      throw UsageError("parabolic index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(rank));
  indices = std::move(idx);
}

bool ParabolicJ::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::string ParabolicJ::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + "}";
}

namespace {

Root unit(int dim, int i, int c = 1) {
  Root r;
  r.coords.assign(dim, 0);
  r.coords[i] = c;
  return r;
}

// Solve the small exact linear system M x = b (M given by columns).
// Returns nullopt when inconsistent.  Sizes here are at most ~12.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<int>>& cols,
                                                   const std::vector<int>& b) {
  std::size_t rows = b.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = b[r];
  }
  std::vector<int> pivot_col(rows, -1);
  std::size_t prow = 0;
  for (std::size_t c = 0; c < ncols && prow < rows; ++c) {
    std::size_t sel = prow;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[prow]);
    Rational inv = Rational(1) / m[prow][c];
    for (auto& x : m[prow]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= ncols; ++k) m[r][k] -= f * m[prow][k];
    }
    pivot_col[prow] = static_cast<int>(c);
    ++prow;
  }
  for (std::size_t r = prow; r < rows; ++r)
    if (!m[r][ncols].is_zero()) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t r = 0; r < prow; ++r) x[pivot_col[r]] = m[r][ncols];
  return x;
}

}  // namespace

bool RootSystem::is_positive_root(const Root& r) const {
  return positive_index_.count(r) != 0;
}

bool RootSystem::is_root(const Root& r) const {
  return is_positive_root(r) || is_positive_root(r.negated());
}

int RootSystem::positive_index(const Root& r) const {
  auto it = positive_index_.find(r);
  if (it == positive_index_.end()) it = positive_index_.find(r.negated());
  if (it == positive_index_.end()) throw UsageError("vector is not a root of the system");
  return it->second;
}

const std::vector<int>& RootSystem::coords_on_simples(const Root& r) const {
  return simple_coords[positive_index(r)];
}

WeylElement RootSystem::reflection(const Root& r) const {
  int norm = 0;
  for (int c : r.coords) norm += c * c;
  WeylElement w;
  w.images.resize(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    // s_r(e_i) = e_i - (2<e_i,r>/<r,r>) r; integral for the classical data.
    std::vector<int> img(ambient_dim, 0);
    img[i] = 1;
    int twice = 2 * r.coords[i];
    assert(twice % norm == 0);
    int f = twice / norm;
    for (int k = 0; k < ambient_dim; ++k) img[k] -= f * r.coords[k];
    int target = 0;
    for (int k = 0; k < ambient_dim; ++k) {
      if (img[k] == 0) continue;
      assert(target == 0 && std::abs(img[k]) == 1);
      target = img[k] > 0 ? k + 1 : -(k + 1);
    }
    assert(target != 0);
    w.images[i] = target;
  }
  return w;
}

int RootSystem::length(const WeylElement& w) const {
  int n = 0;
  for (const Root& b : positive_roots)
    if (apply(w, b).leading_sign() < 0) ++n;
  return n;
}

bool RootSystem::is_left_descent(const WeylElement& w, int i) const {
  return apply(inverse(w), alpha(i)).leading_sign() < 0;
}

bool RootSystem::is_right_descent(const WeylElement& w, int i) const {
  return apply(w, alpha(i)).leading_sign() < 0;
}

std::vector<int> RootSystem::canonical_word(const WeylElement& w) const {
  std::vector<int> word;
  WeylElement cur = w;
  WeylElement inv = inverse(w);
  while (!cur.is_identity()) {
    int pick = 0;
    for (int i = 1; i <= rank; ++i) {
      if (apply(inv, alpha(i)).leading_sign() < 0) {
        pick = i;
        break;
      }
    }
    assert(pick != 0);
    word.push_back(pick);
    cur = compose(simple(pick), cur);
    inv = compose(inv, simple(pick));
  }
  return word;
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int i : word) {
    if (i < 1 || i > rank)
      throw UsageError("simple reflection index " + std::to_string(i) + " out of range");
    w = compose(w, simple(i));
  }
  return w;
}

WeylElement RootSystem::longest_element() const {
  WeylElement w = identity();
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= rank; ++i) {
      if (!is_right_descent(w, i)) {
        pick = i;
        break;
      }
    }
    if (pick == 0) return w;
    w = compose(w, simple(pick));
  }
}

int RootSystem::w0_conjugate_index(int i) const {
  WeylElement w0 = longest_element();
  WeylElement c = compose(compose(w0, simple(i)), inverse(w0));
  for (int j = 1; j <= rank; ++j)
    if (c == simple(j)) return j;
  throw std::logic_error("w0 conjugation did not send a simple reflection to one");
}

std::vector<Root> RootSystem::negative_roots_outside_levi(const ParabolicJ& J) const {
  std::vector<Root> out;
  for (const Root& b : positive_roots)
    if (!in_levi_span(b, J)) out.push_back(b.negated());
  std::sort(out.begin(), out.end());
  return out;
}

bool RootSystem::in_levi_span(const Root& r, const ParabolicJ& J) const {
  const std::vector<int>& c = coords_on_simples(r);
  for (int i = 1; i <= rank; ++i)
    if (c[i - 1] != 0 && !J.contains(i)) return false;
  return true;
}

std::vector<Root> RootSystem::inversions(const WeylElement& w, const ParabolicJ& J) const {
  WeylElement winv = inverse(w);
  std::vector<Root> out;
  for (const Root& b : positive_roots) {
    Root x = apply(winv, b);
    if (x.leading_sign() < 0 && !in_levi_span(x, J)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement RootSystem::minimal_rep(const WeylElement& w, const ParabolicJ& J) const {
  WeylElement cur = w;
  for (;;) {
    int pick = 0;
    for (int j : J.indices) {
      if (is_right_descent(cur, j)) {
        pick = j;
        break;
      }
    }
    if (pick == 0) return cur;
    cur = compose(cur, simple(pick));
  }
}

bool RootSystem::is_minimal_rep(const WeylElement& w, const ParabolicJ& J) const {
  for (int j : J.indices)
    if (is_right_descent(w, j)) return false;
  return true;
}

std::string RootSystem::element_text(const WeylElement& w) const {
  std::vector<int> word = canonical_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += "*";
    s += "s" + std::to_string(word[i]);
  }
  return s;
}

WeylElement RootSystem::parse_element(const std::string& text) const {
  std::string t = trim(text);
  if (t.empty()) throw UsageError("empty group element");
  if (t == "e") return identity();
  std::vector<int> word;
  for (const std::string& piece : split(t, '*')) {
    std::string p = trim(piece);
    if (p.size() < 2 || p[0] != 's')
      throw UsageError("bad group element syntax '" + text + "' (expected e or s1*s2*...)");
    int idx = 0;
    for (std::size_t k = 1; k < p.size(); ++k) {
      if (!isdigit(static_cast<unsigned char>(p[k])))
        throw UsageError("bad group element syntax '" + text + "'");
      idx = idx * 10 + (p[k] - '0');
    }
    if (idx < 1 || idx > rank)
      throw UsageError("simple reflection s" + std::to_string(idx) + " out of range for rank " +
                       std::to_string(rank));
    word.push_back(idx);
  }
  return from_word(word);
}

RootSystem build_root_system(Family family, int rank) {
  int min_rank = family == Family::D ? 2 : 1;
  if (rank < min_rank)
    throw UsageError("family " + family_name(family) + " needs rank >= " +
                     std::to_string(min_rank));
  RootSystem R;
  R.family = family;
  R.rank = rank;
  R.ambient_dim = family == Family::A ? rank + 1 : rank;
  int n = R.ambient_dim;

  auto diff = [&](int i, int j) {
    Root r = unit(n, i);
    r.coords[j] -= 1;
    return r;
  };
  auto sum2 = [&](int i, int j) {
    Root r = unit(n, i);
    r.coords[j] += 1;
    return r;
  };

  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j < n; ++j) R.positive_roots.push_back(diff(i, j));
  if (family == Family::B) {
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j < n; ++j) R.positive_roots.push_back(sum2(i, j));
    for (int i = 0; i < n; ++i) R.positive_roots.push_back(unit(n, i));
  } else if (family == Family::C) {
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j < n; ++j) R.positive_roots.push_back(sum2(i, j));
    for (int i = 0; i < n; ++i) R.positive_roots.push_back(unit(n, i, 2));
  } else if (family == Family::D) {
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j < n; ++j) R.positive_roots.push_back(sum2(i, j));
  }
  std::sort(R.positive_roots.begin(), R.positive_roots.end());
  for (std::size_t k = 0; k < R.positive_roots.size(); ++k)
    R.positive_index_[R.positive_roots[k]] = static_cast<int>(k);

  int chain = family == Family::A ? rank : rank - 1;
  for (int i = 0; i < chain; ++i) R.simple_roots.push_back(diff(i, i + 1));
  if (family == Family::B) R.simple_roots.push_back(unit(n, n - 1));
  if (family == Family::C) R.simple_roots.push_back(unit(n, n - 1, 2));
  if (family == Family::D) R.simple_roots.push_back(sum2(n - 2, n - 1));
  assert(static_cast<int>(R.simple_roots.size()) == rank);

  std::vector<std::vector<int>> cols;
  for (const Root& a : R.simple_roots) cols.push_back(a.coords);
  for (std::size_t k = 0; k < R.positive_roots.size(); ++k) {
    auto sol = solve_columns(cols, R.positive_roots[k].coords);
    if (!sol) throw std::logic_error("positive root outside simple-root span");
    std::vector<int> ic;
    for (const Rational& q : *sol) {
      if (!q.is_integer() || q.sign() < 0)
        throw std::logic_error("positive root with non-nonnegative-integer simple coordinates");
      ic.push_back(static_cast<int>(q.num()));
    }
    R.simple_coords.push_back(std::move(ic));
  }

  for (int i = 1; i <= rank; ++i)
    R.simple_reflections.push_back(R.reflection(R.simple_roots[i - 1]));

  return R;
}

namespace {

struct EnumKey {
  int length;
  std::vector<int> word;
  bool operator<(const EnumKey& o) const {
    if (length != o.length) return length < o.length;
    return word < o.word;
  }
};

std::vector<WeylElement> sorted_by_enum_order(const RootSystem& R,
                                              std::vector<WeylElement> elems) {
  std::vector<std::pair<EnumKey, WeylElement>> keyed;
  keyed.reserve(elems.size());
  for (WeylElement& w : elems) {
    std::vector<int> word = R.canonical_word(w);
    keyed.push_back({{static_cast<int>(word.size()), std::move(word)}, std::move(w)});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<WeylElement> out;
  out.reserve(keyed.size());
  for (auto& p : keyed) out.push_back(std::move(p.second));
  return out;
}

}  // namespace

std::vector<WeylElement> enumerate_group(const RootSystem& R, const Limits& limits) {
  std::unordered_map<WeylElement, bool, WeylHash> seen;
  std::vector<WeylElement> frontier{R.identity()};
  seen[R.identity()] = true;
  std::vector<WeylElement> all{R.identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier) {
      for (int i = 1; i <= R.rank; ++i) {
        WeylElement v = compose(R.simple(i), w);
        if (seen.emplace(v, true).second) {
          if (all.size() + 1 > limits.max_group_order)
            throw ResourceError("Weyl group order exceeds cap " +
                                std::to_string(limits.max_group_order));
          all.push_back(v);
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return sorted_by_enum_order(R, std::move(all));
}

std::vector<WeylElement> enumerate_min_reps(const RootSystem& R, const ParabolicJ& J,
                                            const Limits& limits) {
  std::unordered_map<WeylElement, bool, WeylHash> seen;
  std::vector<WeylElement> frontier{R.identity()};
  seen[R.identity()] = true;
  std::vector<WeylElement> all{R.identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier) {
      for (int i = 1; i <= R.rank; ++i) {
        WeylElement v = R.minimal_rep(compose(R.simple(i), w), J);
        if (seen.emplace(v, true).second) {
          if (all.size() + 1 > limits.max_group_order)
            throw ResourceError("coset enumeration exceeds cap " +
                                std::to_string(limits.max_group_order));
          all.push_back(v);
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return sorted_by_enum_order(R, std::move(all));
}

std::vector<WeylElement> enumerate_parabolic(const RootSystem& R, const ParabolicJ& J,
                                             const Limits& limits) {
  std::unordered_map<WeylElement, bool, WeylHash> seen;
  std::vector<WeylElement> frontier{R.identity()};
  seen[R.identity()] = true;
  std::vector<WeylElement> all{R.identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier) {
      for (int i : J.indices) {
        WeylElement v = compose(R.simple(i), w);
        if (seen.emplace(v, true).second) {
          if (all.size() + 1 > limits.max_group_order)
            throw ResourceError("parabolic subgroup enumeration exceeds cap " +
                                std::to_string(limits.max_group_order));
          all.push_back(v);
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return sorted_by_enum_order(R, std::move(all));
}

bool bruhat_leq(const RootSystem& R, const WeylElement& u, const WeylElement& w) {
  // Lifting property: with i a left descent of w,
  //   u <= w  iff  (s_i u <= s_i w when s_i u < u, else u <= s_i w).
  WeylElement a = u, b = w;
  int la = R.length(a), lb = R.length(b);
  while (lb > 0) {
    if (la > lb) return false;
    if (la == 0) return true;
    int i = 0;
    for (int k = 1; k <= R.rank; ++k) {
      if (R.is_left_descent(b, k)) {
        i = k;
        break;
      }
    }
    b = compose(R.simple(i), b);
    --lb;
    if (R.is_left_descent(a, i)) {
      a = compose(R.simple(i), a);
      --la;
    }
  }
  return la == 0;
}

namespace {

void collect_reduced(const RootSystem& R, const WeylElement& w, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  WeylElement inv = inverse(w);
  for (int i = 1; i <= R.rank; ++i) {
    if (apply(inv, R.alpha(i)).leading_sign() < 0) {
      prefix.push_back(i);
      collect_reduced(R, compose(R.simple(i), w), prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

ReducedWords reduced_words(const RootSystem& R, const WeylElement& w, const Limits& limits) {
  ReducedWords rw;
  rw.canonical = R.canonical_word(w);
  if (static_cast<int>(rw.canonical.size()) > limits.max_reduced_word_length)
    throw ResourceError("reduced-word enumeration capped at length " +
                        std::to_string(limits.max_reduced_word_length));
  std::vector<int> prefix;
  collect_reduced(R, w, prefix, rw.all);
  std::sort(rw.all.begin(), rw.all.end());
  return rw;
}

}  // namespace gkm
