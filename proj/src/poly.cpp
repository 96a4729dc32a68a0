#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gkm {

namespace {

// Sort descending by packed key, combine equal keys, drop zeros.
void normalize(std::vector<Polynomial::PackedTerm>& terms) {
  // Lists coming out of merges and layered divisions are already clean; one
  // scan spares them the sort and the compaction pass.
  bool clean = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if ((i > 0 && terms[i - 1].key <= terms[i].key) || terms[i].coeff.is_zero()) {
      clean = false;
      break;
    }
  }
  if (clean) return;
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.key > b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::uint64_t key = terms[i].key;
    Rational c = terms[i].coeff;
    for (++i; i < terms.size() && terms[i].key == key; ++i) c += terms[i].coeff;
    if (!c.is_zero()) terms[out++] = {key, c};
  }
  terms.resize(out);
}

// Merge two already-sorted term lists into a + b or a - b.
std::vector<Polynomial::PackedTerm> merge_combine(const std::vector<Polynomial::PackedTerm>& a,
                                                  const std::vector<Polynomial::PackedTerm>& b,
                                                  bool negate_b) {
  std::vector<Polynomial::PackedTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key > a[i].key) {
      out.push_back({b[j].key, negate_b ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Rational c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].key, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void Polynomial::check_dim(int dim) {
  if (dim < 0) throw std::invalid_argument("polynomial dimension must be nonnegative");
  if (dim > kMaxVars) {
    throw ResourceError("polynomials support at most " + std::to_string(kMaxVars) +
                        " variables; requested " + std::to_string(dim));
  }
}

std::uint64_t Polynomial::pack(const std::vector<int>& e) {
  check_dim(static_cast<int>(e.size()));
  std::uint64_t key = 0;
  int total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw std::invalid_argument("negative exponent in monomial");
    total += e[i];
    if (e[i] > kMaxDegree || total > kMaxDegree) {
      throw ResourceError("monomial degree exceeds the supported limit of " +
                          std::to_string(kMaxDegree));
    }
    key |= static_cast<std::uint64_t>(e[i]) << (49 - 7 * static_cast<int>(i));
  }
  key |= static_cast<std::uint64_t>(total) << 56;
  return key;
}

std::vector<int> Polynomial::unpack(std::uint64_t key, int dim) {
  std::vector<int> e(dim);
  for (int i = 0; i < dim; ++i) e[i] = key_exponent(key, i);
  return e;
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  if (!c.is_zero()) p.terms_.push_back({0, c});
  return p;
}

Polynomial Polynomial::variable(int dim, int i) {
  check_dim(dim);
  if (i < 1 || i > dim) throw std::invalid_argument("variable index out of range");
  Polynomial p(dim);
  p.terms_.push_back({unit_key(i - 1), Rational(1)});
  return p;
}

Polynomial Polynomial::from_root(const Root& r) {
  int dim = static_cast<int>(r.coords.size());
  check_dim(dim);
  Polynomial p(dim);
  for (int i = 0; i < dim; ++i) {
    if (r.coords[i] != 0) p.terms_.push_back({unit_key(i), Rational(r.coords[i])});
  }
  normalize(p.terms_);
  return p;
}

Polynomial Polynomial::from_terms(int dim, std::vector<Term> terms) {
  Polynomial p(dim);
  p.terms_.reserve(terms.size());
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != dim) {
      throw std::invalid_argument("exponent vector length does not match dimension");
    }
    p.terms_.push_back({pack(e), c});
  }
  normalize(p.terms_);
  return p;
}

Polynomial Polynomial::from_packed(int dim, std::vector<PackedTerm> terms) {
  check_dim(dim);
  Polynomial p(dim);
  p.terms_ = std::move(terms);
  normalize(p.terms_);
  return p;
}

std::vector<Polynomial::Term> Polynomial::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(unpack(t.key, dim_), t.coeff);
  return out;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : key_degree(terms_.front().key);
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int top = key_degree(terms_.front().key);
  if (key_degree(terms_.back().key) != top) return std::nullopt;
  return top;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coeff;
  return Rational(0);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().key == 0);
}

Polynomial& Polynomial::add_scaled(const Polynomial& o, bool negate) {
  if (dim_ != o.dim_) {
    if (terms_.empty() && o.terms_.empty()) return *this;
    if (dim_ == 0 && terms_.empty()) {
      dim_ = o.dim_;
    } else if (!(o.dim_ == 0 && o.terms_.empty())) {
      throw std::invalid_argument("polynomial dimension mismatch");
    }
  }
  std::vector<PackedTerm> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key > o.terms_[j].key)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].key > terms_[i].key) {
      Rational c = o.terms_[j].coeff;
      if (negate) c = -c;
      if (!c.is_zero()) merged.push_back({o.terms_[j].key, c});
      ++j;
    } else {
      Rational c = terms_[i].coeff;
      if (negate) {
        c -= o.terms_[j].coeff;
      } else {
        c += o.terms_[j].coeff;
      }
      if (!c.is_zero()) merged.push_back({terms_[i].key, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return add_scaled(o, false); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return add_scaled(o, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_ && !a.terms_.empty() && !b.terms_.empty()) {
    throw std::invalid_argument("polynomial dimension mismatch");
  }
  Polynomial out(a.terms_.empty() ? b.dim_ : a.dim_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.degree() + b.degree() > Polynomial::kMaxDegree) {
    throw ResourceError("product degree exceeds the supported limit of " +
                        std::to_string(Polynomial::kMaxDegree));
  }
  // A one-term factor shifts every key by the same amount, keeping the order.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a.terms_.front() : b.terms_.front();
    const auto& many = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    out.terms_.reserve(many.size());
    for (const auto& t : many) out.terms_.push_back({t.key + single.key, t.coeff * single.coeff});
    return out;
  }
  std::vector<Polynomial::PackedTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      terms.push_back({ta.key + tb.key, ta.coeff * tb.coeff});
    }
  }
  normalize(terms);
  out.terms_ = std::move(terms);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(dim_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.key, -t.coeff});
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(dim_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.key, t.coeff * c});
  return out;
}

bool Polynomial::term_before(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors
}

Polynomial apply(const WeylElement& w, const Polynomial& p) {
  int dim = p.dim();
  if (w.dim() != dim) throw std::invalid_argument("element dimension mismatch");

  // Classify once per call: variables whose field moves to another slot, and
  // variables that only pick up a sign.  Simple reflections move at most two.
  struct Moved {
    int from;
    int to;
    bool negative;
  };
  Moved moved[Polynomial::kMaxVars];
  int sign_only[Polynomial::kMaxVars];
  int n_moved = 0, n_sign = 0;
  for (int i = 0; i < dim; ++i) {
    int image = w.images[i];  // signed, 1-based
    int target = std::abs(image) - 1;
    if (target != i) {
      moved[n_moved++] = {i, target, image < 0};
    } else if (image < 0) {
      sign_only[n_sign++] = i;
    }
  }

  std::vector<Polynomial::PackedTerm> terms;
  terms.reserve(p.packed().size());
  if (n_moved == 2 && n_sign == 0 && !moved[0].negative && !moved[1].negative &&
      moved[0].from == moved[1].to && moved[0].to == moved[1].from) {
    // A plain transposition of two variables: exchange the two 7-bit fields.
    int sa = 49 - 7 * moved[0].from;
    int sb = 49 - 7 * moved[0].to;
    for (const auto& t : p.packed()) {
      std::uint64_t x = ((t.key >> sa) ^ (t.key >> sb)) & 0x7f;
      terms.push_back({t.key ^ ((x << sa) | (x << sb)), t.coeff});
    }
  } else {
    for (const auto& t : p.packed()) {
      std::uint64_t key = t.key;
      bool flip = false;
      for (int m = 0; m < n_moved; ++m) {
        int e = Polynomial::key_exponent(t.key, moved[m].from);
        if (e == 0) continue;
        key -= static_cast<std::uint64_t>(e) << (49 - 7 * moved[m].from);
        key += static_cast<std::uint64_t>(e) << (49 - 7 * moved[m].to);
        if (moved[m].negative && (e & 1)) flip = !flip;
      }
      for (int s = 0; s < n_sign; ++s) {
        if (Polynomial::key_exponent(t.key, sign_only[s]) & 1) flip = !flip;
      }
      terms.push_back({key, flip ? -t.coeff : t.coeff});
    }
  }

  // Keys are permuted injectively and keep their total degree, so the list is
  // still grouped in descending-degree runs with no duplicates; restoring the
  // order only needs a sort inside each run.  A pure sign change keeps every
  // key in place.
  if (n_moved != 0) {
    std::size_t start = 0;
    while (start < terms.size()) {
      int d = Polynomial::key_degree(terms[start].key);
      std::size_t end = start + 1;
      while (end < terms.size() && Polynomial::key_degree(terms[end].key) == d) ++end;
      std::sort(terms.begin() + start, terms.begin() + end,
                [](const auto& a, const auto& b) { return a.key > b.key; });
      start = end;
    }
  }
  Polynomial out(dim);
  out.terms_ = std::move(terms);
  return out;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& forms) {
  if (static_cast<int>(forms.size()) != p.dim()) {
    throw std::invalid_argument("substitution needs one form per variable");
  }
  int out_dim = forms.empty() ? 0 : forms.front().dim();
  for (const auto& f : forms) {
    if (f.dim() != out_dim) throw std::invalid_argument("substitution forms disagree in dimension");
  }
  Polynomial out(out_dim);
  // Cache powers of each form as they are needed.
  std::vector<std::vector<Polynomial>> powers(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) powers[i].push_back(Polynomial::one(out_dim));
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * forms[i]);
    return cache[e];
  };
  for (const auto& t : p.packed()) {
    Polynomial term = Polynomial::constant(out_dim, t.coeff);
    for (int i = 0; i < p.dim(); ++i) {
      int e = Polynomial::key_exponent(t.key, i);
      if (e > 0) term = term * power(i, e);
    }
    out += term;
  }
  return out;
}

namespace {

// Leading variable of the linear form, or -1 for the zero form.
int pivot_of(const Root& r) {
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (r.coords[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

// Divide sum_k t_pivot^k * layer[k] by r, where pivot is the leading variable
// of r and each layer is sorted with the pivot stripped from its keys.
//
// Synthetic division: matching pivot powers in p = (c*t + rest) * q + rem
// gives q[k-1] = (layer[k] - rest*q[k]) / c and rem = layer[0] - rest*q[0].
// Multiplying a sorted list by one term keeps it sorted, so everything here
// is a plain merge.
LinearDivision divide_layers(int dim, const Root& r, int pivot,
                             std::vector<std::vector<Polynomial::PackedTerm>> layer) {
  Rational c(r.coords[pivot]);
  // The non-pivot part of the divisor, as packed degree-1 terms.
  std::vector<Polynomial::PackedTerm> rest;
  for (int i = pivot + 1; i < dim; ++i) {
    if (r.coords[i] != 0) rest.push_back({Polynomial::unit_key(i), Rational(r.coords[i])});
  }
  auto times_rest = [&](const std::vector<Polynomial::PackedTerm>& q) {
    std::vector<Polynomial::PackedTerm> out;
    for (const auto& b : rest) {
      std::vector<Polynomial::PackedTerm> row;
      row.reserve(q.size());
      for (const auto& t : q) row.push_back({t.key + b.key, t.coeff * b.coeff});
      out = out.empty() ? std::move(row) : merge_combine(out, row, false);
    }
    return out;
  };

  const std::uint64_t unit = Polynomial::unit_key(pivot);
  const bool unit_c = c == Rational(1);
  int top = static_cast<int>(layer.size()) - 1;
  std::vector<std::vector<Polynomial::PackedTerm>> q(static_cast<std::size_t>(top));
  std::vector<Polynomial::PackedTerm> carry;  // rest * q[k]
  for (int k = top; k >= 1; --k) {
    auto num = carry.empty() ? std::move(layer[k]) : merge_combine(layer[k], carry, true);
    if (!unit_c) {
      for (auto& t : num) t.coeff /= c;
    }
    carry = times_rest(num);
    q[k - 1] = std::move(num);
  }
  auto rem = carry.empty() ? std::move(layer[0]) : merge_combine(layer[0], carry, true);

  // Either way p == divisor * quotient + remainder exactly.
  LinearDivision res;
  if (top == 1) {
    res.quotient = Polynomial::from_packed(dim, std::move(q[0]));
  } else {
    std::vector<Polynomial::PackedTerm> all;
    {
      std::size_t total = 0;
      for (const auto& block : q) total += block.size();
      all.reserve(total);
    }
    for (int k = 0; k < top; ++k) {
      for (auto& t : q[k]) all.push_back({t.key + static_cast<std::uint64_t>(k) * unit, t.coeff});
    }
    res.quotient = Polynomial::from_packed(dim, std::move(all));
  }
  res.divisible = rem.empty();
  res.remainder = Polynomial::from_packed(dim, std::move(rem));
  return res;
}

}  // namespace

LinearDivision divide_linear(const Polynomial& p, const Root& r) {
  int dim = p.dim();
  if (static_cast<int>(r.coords.size()) != dim) {
    throw std::invalid_argument("root dimension mismatch");
  }
  int pivot = pivot_of(r);
  if (pivot < 0) throw std::invalid_argument("cannot divide by the zero form");
  if (p.is_zero()) {
    LinearDivision res;
    res.quotient = Polynomial(dim);
    res.remainder = Polynomial(dim);
    res.divisible = true;
    return res;
  }

  // Split p by the pivot exponent: p = sum_k t_pivot^k * layer[k], with the
  // pivot stripped from each layer's keys.  Layers inherit p's sorting, since
  // the strip shifts every key in a layer by the same amount.
  const std::uint64_t unit = Polynomial::unit_key(pivot);
  int top = 0;
  for (const auto& t : p.packed()) top = std::max(top, Polynomial::key_exponent(t.key, pivot));
  std::vector<std::vector<Polynomial::PackedTerm>> layer(top + 1);
  {
    std::vector<std::size_t> counts(top + 1, 0);
    for (const auto& t : p.packed()) ++counts[Polynomial::key_exponent(t.key, pivot)];
    for (int k = 0; k <= top; ++k) layer[k].reserve(counts[k]);
  }
  for (const auto& t : p.packed()) {
    int k = Polynomial::key_exponent(t.key, pivot);
    layer[k].push_back({t.key - static_cast<std::uint64_t>(k) * unit, t.coeff});
  }
  return divide_layers(dim, r, pivot, std::move(layer));
}

LinearDivision divide_linear_diff(const Polynomial& a, const Polynomial& b, const Root& r) {
  int dim = a.dim();
  if (b.dim() != dim) {
    if (a.is_zero() && a.dim() == 0) {
      dim = b.dim();
    } else if (!(b.is_zero() && b.dim() == 0)) {
      throw std::invalid_argument("polynomial dimension mismatch");
    }
  }
  if (static_cast<int>(r.coords.size()) != dim) {
    throw std::invalid_argument("root dimension mismatch");
  }
  int pivot = pivot_of(r);
  if (pivot < 0) throw std::invalid_argument("cannot divide by the zero form");

  // Merge a - b straight into the pivot layers of divide_layers: each layer
  // picks up a subsequence of the merged stream, so it comes out sorted.
  const std::uint64_t unit = Polynomial::unit_key(pivot);
  std::vector<std::vector<Polynomial::PackedTerm>> layer;
  auto push = [&](std::uint64_t key, const Rational& coeff) {
    int k = Polynomial::key_exponent(key, pivot);
    if (k >= static_cast<int>(layer.size())) layer.resize(k + 1);
    layer[k].push_back({key - static_cast<std::uint64_t>(k) * unit, coeff});
  };
  const auto& ta = a.packed();
  const auto& tb = b.packed();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].key > tb[j].key)) {
      push(ta[i].key, ta[i].coeff);
      ++i;
    } else if (i == ta.size() || tb[j].key > ta[i].key) {
      push(tb[j].key, -tb[j].coeff);
      ++j;
    } else {
      Rational c = ta[i].coeff - tb[j].coeff;
      if (!c.is_zero()) push(ta[i].key, c);
      ++i;
      ++j;
    }
  }
  if (layer.empty()) {
    LinearDivision res;
    res.quotient = Polynomial(dim);
    res.remainder = Polynomial(dim);
    res.divisible = true;
    return res;
  }
  return divide_layers(dim, r, pivot, std::move(layer));
}

Polynomial divided_difference(const RootSystem& R, int i, const Polynomial& f) {
  Polynomial num = f - apply(R.reflection(R.alpha(i)), f);
  auto div = divide_linear(num, R.alpha(i));
  if (!div.divisible) {
    throw std::logic_error("divided difference produced a non-divisible numerator");
  }
  return div.quotient;
}

namespace {

// Invert a square rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular change-of-basis matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational lead = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational factor = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

bool AlphaExpansion::all_nonnegative() const {
  for (const auto& [e, c] : coeffs) {
    if (c.num() < 0) return false;
  }
  return true;
}

std::string AlphaExpansion::str() const {
  Polynomial p = Polynomial::from_terms(rank, coeffs);
  std::string body = poly_text(p, 'a');
  if (residual_flag) body += " [+ invariant part]";
  return body;
}

AlphaExpansion alpha_expand(const Polynomial& p, const RootSystem& R) {
  int n = R.ambient_dim;
  if (p.dim() != n) throw std::invalid_argument("polynomial does not live in the ambient space");
  AlphaExpansion out;
  out.rank = R.rank;

  // Build the change of basis: rows are the simple coroot coordinates of the
  // t-variables.  For family A the simple roots span only the sum-zero
  // hyperplane, so pad with the invariant functional t_1+...+t_n.
  std::vector<std::vector<Rational>> basis;  // basis[j][i]: coefficient of t_i in form j
  for (int j = 0; j < R.rank; ++j) {
    std::vector<Rational> row(n, Rational(0));
    for (int i = 0; i < n; ++i) row[i] = Rational(R.alpha(j + 1).coords[i]);
    basis.push_back(std::move(row));
  }
  int extra = n - R.rank;
  for (int j = 0; j < extra; ++j) {
    std::vector<Rational> row(n, Rational(0));
    for (int i = 0; i < n; ++i) row[i] = Rational(1);
    basis.push_back(std::move(row));
  }
  if (static_cast<int>(basis.size()) != n) {
    throw std::logic_error("unexpected ambient dimension in alpha expansion");
  }

  // t_i = sum_j inv[i][j] * form_j, so substitute u-variables for the forms.
  auto inv = invert(std::move(basis));
  std::vector<Polynomial> forms;
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial::Term> terms;
    for (int j = 0; j < n; ++j) {
      if (!inv[i][j].is_zero()) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        terms.emplace_back(std::move(e), inv[i][j]);
      }
    }
    forms.push_back(Polynomial::from_terms(n, std::move(terms)));
  }
  Polynomial in_u = substitute(p, forms);

  // Split off any term that touches the padded invariant variables.
  for (auto& [e, c] : in_u.terms()) {
    bool residual = false;
    for (int j = R.rank; j < n; ++j) {
      if (e[j] != 0) residual = true;
    }
    if (residual) {
      out.residual_flag = true;
      continue;
    }
    out.coeffs.emplace_back(std::vector<int>(e.begin(), e.begin() + R.rank), c);
  }
  std::sort(out.coeffs.begin(), out.coeffs.end(),
            [](const auto& a, const auto& b) { return Polynomial::term_before(a.first, b.first); });
  return out;
}

namespace {

std::string coeff_text(const Rational& c) {
  std::string s = std::to_string(c.num() < 0 ? -c.num() : c.num());
  if (c.den() != 1) s += "/" + std::to_string(c.den());
  return s;
}

std::string monomial_text(const std::vector<int>& e, char var) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string poly_text(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = c.num() < 0;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = monomial_text(e, var);
    Rational a = neg ? -c : c;
    if (mono.empty()) {
      s += coeff_text(a);
    } else if (a == Rational(1)) {
      s += mono;
    } else if (a.den() == 1) {
      s += coeff_text(a) + "*" + mono;
    } else {
      s += "(" + coeff_text(a) + ")*" + mono;
    }
  }
  return s;
}

std::string root_text(const Root& r) {
  Polynomial p = Polynomial::from_root(r);
  return poly_text(p);
}

namespace {

// Recursive-descent parser for the same grammar poly_text emits, plus
// whitespace, parentheses, and explicit "+"/"-" chains.
class Parser {
 public:
  Parser(const std::string& text, int dim, char var) : text_(text), dim_(dim), var_(var) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw UsageError("cannot parse polynomial at position " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  Polynomial expression() {
    Polynomial p(dim_);
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    p += term(negate);
    while (true) {
      if (eat('+')) {
        p += term(false);
      } else if (eat('-')) {
        p += term(true);
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial term(bool negate) {
    Polynomial p = factor();
    while (true) {
      if (eat('*')) {
        p = p * factor();
      } else {
        char c = peek();
        // Allow juxtaposition like "2t1" or ")(": treat as multiplication.
        if (c == '(' || c == var_ || std::isdigit(static_cast<unsigned char>(c))) {
          p = p * factor();
        } else {
          break;
        }
      }
    }
    return negate ? -p : p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      long long e = integer();
      if (e < 0) fail("negative exponent");
      if (e > Polynomial::kMaxDegree) fail("exponent too large");
      Polynomial out = Polynomial::one(dim_);
      for (long long k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (eat('(')) {
      Polynomial p = expression();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    char c = peek();
    if (c == var_) {
      ++pos_;
      long long idx = integer();
      if (idx < 1 || idx > dim_) fail("variable index out of range");
      return Polynomial::variable(dim_, static_cast<int>(idx));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = integer();
      long long den = 1;
      if (eat('/')) den = integer();
      if (den == 0) fail("division by zero");
      return Polynomial::constant(dim_, Rational(num, den));
    }
    fail("expected a number, variable, or '('");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int dim_ = 0;
  char var_ = 't';
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dim, char var) {
  Polynomial::pack(std::vector<int>(dim, 0));  // validates the dimension bound
  return Parser(text, dim, var).parse();
}

}  // namespace gkm
