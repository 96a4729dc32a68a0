#include "gkm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "util.hpp"

namespace gkm {

namespace {

Polynomial zero_of(const MomentGraph* g) {
  return Polynomial(g ? g->rs.ambient_dim : 0);
}

void require_same_graph(const GkmClass& a, const GkmClass& b) {
  if (a.graph() != b.graph()) {
    throw std::logic_error("classes live on different moment graphs");
  }
}

}  // namespace

namespace {

auto entry_pos(std::vector<GkmClass::Entry>& entries, int v) {
  return std::lower_bound(entries.begin(), entries.end(), v,
                          [](const GkmClass::Entry& e, int key) { return e.first < key; });
}

}  // namespace

Polynomial GkmClass::value(int v) const {
  const Polynomial* p = find(v);
  return p != nullptr ? *p : zero_of(graph_);
}

const Polynomial* GkmClass::find(int v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v,
                             [](const Entry& e, int key) { return e.first < key; });
  return it != values_.end() && it->first == v ? &it->second : nullptr;
}

void GkmClass::set(int v, Polynomial p) {
  auto it = entry_pos(values_, v);
  bool present = it != values_.end() && it->first == v;
  if (p.is_zero()) {
    if (present) values_.erase(it);
  } else if (present) {
    it->second = std::move(p);
  } else {
    values_.insert(it, {v, std::move(p)});
  }
}

void GkmClass::append(int v, Polynomial p) {
  if (!p.is_zero()) values_.emplace_back(v, std::move(p));
}

std::optional<int> GkmClass::degree() const {
  std::optional<int> deg;
  for (const auto& [v, p] : values_) {
    auto d = p.homogeneous_degree();
    if (!d) return std::nullopt;
    if (!deg) {
      deg = d;
    } else if (*deg != *d) {
      return std::nullopt;
    }
  }
  return deg;
}

namespace {

// Merge two sorted supports into a + b or a - b.
std::vector<GkmClass::Entry> merge_values(const std::vector<GkmClass::Entry>& a,
                                          const std::vector<GkmClass::Entry>& b, bool negate_b) {
  std::vector<GkmClass::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
      ++j;
    } else {
      Polynomial p = a[i].second;
      if (negate_b) {
        p -= b[j].second;
      } else {
        p += b[j].second;
      }
      if (!p.is_zero()) out.emplace_back(a[i].first, std::move(p));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

GkmClass& GkmClass::operator+=(const GkmClass& o) {
  require_same_graph(*this, o);
  values_ = merge_values(values_, o.values_, false);
  return *this;
}

GkmClass& GkmClass::operator-=(const GkmClass& o) {
  require_same_graph(*this, o);
  values_ = merge_values(values_, o.values_, true);
  return *this;
}

GkmClass operator*(const GkmClass& a, const GkmClass& b) {
  require_same_graph(a, b);
  GkmClass out(a.graph());
  auto i = a.values_.begin();
  auto j = b.values_.begin();
  while (i != a.values_.end() && j != b.values_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      out.append(i->first, i->second * j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

GkmClass GkmClass::scaled(const Polynomial& c) const {
  GkmClass out(graph_);
  if (c.is_zero()) return out;
  out.values_.reserve(values_.size());
  for (const auto& [v, p] : values_) out.append(v, p * c);
  return out;
}

GkmClass GkmClass::operator-() const {
  GkmClass out(graph_);
  out.values_.reserve(values_.size());
  for (const auto& [v, p] : values_) out.append(v, -p);
  return out;
}

bool GkmClass::operator==(const GkmClass& o) const {
  return graph_ == o.graph_ && values_ == o.values_;
}

GkmReport verify_gkm(const GkmClass& p) {
  const MomentGraph* g = p.graph();
  if (g == nullptr) throw std::logic_error("class has no moment graph");
  GkmReport report;
  for (int e = 0; e < static_cast<int>(g->edges.size()); ++e) {
    const GraphEdge& edge = g->edges[e];
    const Polynomial* a = p.find(edge.src);
    const Polynomial* b = p.find(edge.dst);
    if (a == nullptr && b == nullptr) continue;
    Polynomial diff = a != nullptr ? *a : Polynomial(g->rs.ambient_dim);
    if (b != nullptr) diff -= *b;
    if (diff.is_zero()) continue;
    auto div = divide_linear(diff, edge.label);
    if (!div.divisible) {
      report.pass = false;
      report.violations.push_back({e, std::move(diff), std::move(div.remainder)});
    }
  }
  return report;
}

// Both localization routines run the same subword dynamic program over a
// reduced word of v.  A state is a group element u reached by a reduced
// subword of the prefix scanned so far, carrying the sum of root products
// over all subwords reaching it; letter t may be taken only when it extends
// u reduced, i.e. u(alpha_c) is positive.
std::unordered_map<WeylElement, Polynomial, WeylHash> billey_localize_all(const RootSystem& R,
                                                                   const WeylElement& v) {
  std::unordered_map<WeylElement, Polynomial, WeylHash> state;
  state.emplace(R.identity(), Polynomial::one(R.ambient_dim));
  WeylElement prefix = R.identity();
  for (int c : R.canonical_word(v)) {
    Polynomial rp = Polynomial::from_root(apply(prefix, R.alpha(c)));
    std::vector<std::pair<WeylElement, Polynomial>> taken;
    for (const auto& [u, acc] : state) {
      if (apply(u, R.alpha(c)).leading_sign() > 0) {
        taken.emplace_back(compose(u, R.simple(c)), acc * rp);
      }
    }
    for (auto& [u, acc] : taken) {
      auto it = state.find(u);
      if (it == state.end()) {
        state.emplace(std::move(u), std::move(acc));
      } else {
        it->second += acc;
      }
    }
    prefix = compose(prefix, R.simple(c));
  }
  return state;
}

Polynomial billey_localize(const RootSystem& R, const WeylElement& w, const std::vector<int>& v_word) {
  int lw = R.length(w);
  if (lw > static_cast<int>(v_word.size())) return Polynomial(R.ambient_dim);
  std::unordered_map<WeylElement, Polynomial, WeylHash> state;
  state.emplace(R.identity(), Polynomial::one(R.ambient_dim));
  WeylElement prefix = R.identity();
  for (int c : v_word) {
    Polynomial rp = Polynomial::from_root(apply(prefix, R.alpha(c)));
    std::vector<std::pair<WeylElement, Polynomial>> taken;
    for (const auto& [u, acc] : state) {
      if (apply(u, R.alpha(c)).leading_sign() > 0) {
        WeylElement next = compose(u, R.simple(c));
        // Only states below w in Bruhat order can still reach it.
        if (!bruhat_leq(R, next, w)) continue;
        taken.emplace_back(std::move(next), acc * rp);
      }
    }
    for (auto& [u, acc] : taken) {
      auto it = state.find(u);
      if (it == state.end()) {
        state.emplace(std::move(u), std::move(acc));
      } else {
        it->second += acc;
      }
    }
    prefix = compose(prefix, R.simple(c));
  }
  auto it = state.find(w);
  return it != state.end() ? it->second : Polynomial(R.ambient_dim);
}

Polynomial billey_localize(const RootSystem& R, const WeylElement& w, const WeylElement& v) {
  return billey_localize(R, w, R.canonical_word(v));
}

namespace {

void fill_pivots(FlowUpBasis& b, const MomentGraph& g) {
  int n = g.vertex_count();
  b.pivot_roots.resize(n);
  b.pivots.reserve(n);
  for (int v = 0; v < n; ++v) {
    b.pivot_roots[v] = g.rs.inversions(g.vertices[v].coset.min_rep, g.J);
    Polynomial prod = Polynomial::one(g.rs.ambient_dim);
    for (const Root& r : b.pivot_roots[v]) prod = prod * Polynomial::from_root(r);
    b.pivots.push_back(std::move(prod));
  }
}

}  // namespace

FlowUpBasis flowup_basis(const MomentGraph& g) {
  FlowUpBasis b;
  b.graph = &g;
  int n = g.vertex_count();
  b.classes.assign(n, GkmClass(&g));
  fill_pivots(b, g);
  for (int v = 0; v < n; ++v) {
    auto column = billey_localize_all(g.rs, g.vertices[v].coset.min_rep);
    for (auto& [u, p] : column) {
      int uid = g.vertex_of(u);
      if (uid < 0 || p.is_zero()) continue;
      b.classes[uid].set(v, std::move(p));
    }
  }
  return b;
}

GkmClass weyl_act(const WeylElement& w, const GkmClass& p) {
  const MomentGraph* g = p.graph();
  if (g == nullptr) throw std::logic_error("class has no moment graph");
  GkmClass out(g);
  for (const auto& [v, val] : p.values()) {
    int target = g->coset_vertex(compose(w, g->vertices[v].coset.min_rep));
    out.set(target, apply(w, val));
  }
  return out;
}

GkmClass delta(int i, const GkmClass& p) {
  const MomentGraph* g = p.graph();
  if (g == nullptr) throw std::logic_error("class has no moment graph");
  const std::vector<int>& act = g->left_action(i);
  const WeylElement& si = g->rs.simple(i);
  const Root& ai = g->rs.alpha(i);
  int n = g->vertex_count();
  // Scratch shared across calls; entries are reset only where used.
  thread_local std::vector<const Polynomial*> in;
  thread_local std::vector<int> support;
  thread_local std::vector<Polynomial> quo;
  thread_local std::vector<char> has;
  if (static_cast<int>(in.size()) < n) {
    in.resize(n, nullptr);
    quo.resize(n);
    has.resize(n, 0);
  }
  support.clear();
  support.reserve(p.values().size() * 2);
  for (const auto& [v, val] : p.values()) {
    support.push_back(v);
    support.push_back(act[v]);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (int v : support) {
    in[v] = nullptr;
    has[v] = 0;
  }
  for (const auto& [v, val] : p.values()) in[v] = &val;
  const Polynomial zero(g->rs.ambient_dim);
  for (int v : support) {
    int v2 = act[v];
    if (v2 < v) {
      // The numerators at s_i v and at v are exchanged (up to sign) by s_i,
      // so this quotient is s_i applied to the partner's, computed already.
      if (has[v2]) {
        quo[v] = apply(si, quo[v2]);
        has[v] = 1;
      }
      continue;
    }
    const Polynomial* a = in[v];
    const Polynomial* b = in[v2];
    auto div = divide_linear_diff(a != nullptr ? *a : zero,
                                  b != nullptr ? apply(si, *b) : zero, ai);
    if (!div.divisible) {
      throw std::logic_error("divided difference numerator is not divisible by alpha_i");
    }
    if (div.quotient.is_zero()) continue;
    quo[v] = std::move(div.quotient);
    has[v] = 1;
  }
  GkmClass out(g);
  for (int v : support) {
    if (has[v]) out.append(v, std::move(quo[v]));
  }
  return out;
}

GkmClass delta_word(const std::vector<int>& word, const GkmClass& p) {
  GkmClass out = p;
  for (int c : word) out = delta(c, out);
  return out;
}

GkmClass kk_partial(int i, const GkmClass& p) {
  const MomentGraph* g = p.graph();
  if (g == nullptr) throw std::logic_error("class has no moment graph");
  const std::vector<int>& act = g->right_action(i);
  std::set<int> support;
  for (const auto& [v, val] : p.values()) {
    support.insert(v);
    support.insert(act[v]);
  }
  GkmClass out(g);
  for (int v : support) {
    const Polynomial* a = p.find(v);
    const Polynomial* b = p.find(act[v]);
    Polynomial num = a != nullptr ? *a : Polynomial(g->rs.ambient_dim);
    if (b != nullptr) num -= *b;
    if (num.is_zero()) continue;
    Root d = apply(g->vertices[v].coset.min_rep, g->rs.alpha(i)).negated();
    auto div = divide_linear(num, d);
    if (!div.divisible) {
      throw std::logic_error("right operator numerator is not divisible by -v(alpha_i)");
    }
    out.set(v, std::move(div.quotient));
  }
  return out;
}

FlowUpBasis generate_from_top(const MomentGraph& g) {
  const RootSystem& R = g.rs;
  FlowUpBasis b;
  b.graph = &g;
  int n = g.vertex_count();
  b.classes.assign(n, GkmClass(&g));
  fill_pivots(b, g);

  WeylElement w0 = R.longest_element();
  int top = g.top_vertex();
  b.classes[top].set(top, b.pivots[top]);

  // Each vertex [u] is reached from the top class by divided differences
  // along the word of m = min-rep of w0 u, with each letter conjugated by
  // w0; peeling one letter at a time lets every step reuse the class whose
  // m is one letter shorter.
  struct Item {
    int vid = 0;
    WeylElement m;
    std::vector<int> mword;
  };
  std::vector<Item> items(n);
  std::unordered_map<WeylElement, int, WeylHash> by_m;
  for (int v = 0; v < n; ++v) {
    items[v].vid = v;
    items[v].m = R.minimal_rep(compose(w0, g.vertices[v].coset.min_rep), g.J);
    items[v].mword = R.canonical_word(items[v].m);
    by_m.emplace(items[v].m, v);
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.mword.size() != b.mword.size()) return a.mword.size() < b.mword.size();
    return a.vid < b.vid;
  });
  for (const Item& it : items) {
    if (it.mword.empty()) continue;  // the top class itself
    int first = it.mword.front();
    WeylElement parent_m = compose(R.simple(first), it.m);
    auto found = by_m.find(parent_m);
    if (found == by_m.end()) {
      throw std::logic_error("missing parent class while generating from the top");
    }
    b.classes[it.vid] = delta(R.w0_conjugate_index(first), b.classes[found->second]);
  }
  return b;
}

std::map<int, Polynomial> decompose(const GkmClass& p, const FlowUpBasis& basis) {
  if (p.graph() != basis.graph) {
    throw std::logic_error("class and basis live on different moment graphs");
  }
  std::map<int, Polynomial> coeffs;
  GkmClass rest = p;
  int n = basis.graph->vertex_count();
  for (int v = 0; v < n; ++v) {
    const Polynomial* lead = rest.find(v);
    if (lead == nullptr) continue;
    Polynomial c = *lead;
    for (const Root& r : basis.pivot_roots[v]) {
      auto div = divide_linear(c, r);
      if (!div.divisible) {
        throw VerificationError("class is not in the span of the flow-up basis");
      }
      c = std::move(div.quotient);
    }
    rest -= basis.classes[v].scaled(c);
    coeffs.emplace(v, std::move(c));
  }
  if (!rest.is_zero()) {
    throw VerificationError("class is not in the span of the flow-up basis");
  }
  return coeffs;
}

std::map<int, Polynomial> structure_constants(const FlowUpBasis& basis, int u, int v,
                                              bool equivariant) {
  auto coeffs = decompose(basis.classes.at(u) * basis.classes.at(v), basis);
  if (equivariant) return coeffs;
  std::map<int, Polynomial> out;
  int dim = basis.graph->rs.ambient_dim;
  for (const auto& [w, c] : coeffs) {
    Rational k = c.constant_term();
    if (k.is_zero()) continue;
    if (!k.is_integer()) {
      throw std::logic_error("ordinary structure constant is not an integer");
    }
    out.emplace(w, Polynomial::constant(dim, k));
  }
  return out;
}

nlohmann::json class_to_json(const GkmClass& p) {
  if (p.graph() == nullptr) throw std::logic_error("class has no moment graph");
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [v, poly] : p.values()) {
    values[std::to_string(v)] = poly_text(poly);
  }
  return nlohmann::json{
      {"schema_version", 1},
      {"graph_ref", graph_ref(*p.graph())},
      {"values", std::move(values)},
  };
}

GkmClass class_from_json(const MomentGraph& g, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("class file must hold a JSON object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != 1) {
    throw UsageError("class file has an unsupported schema_version");
  }
  if (!j.contains("graph_ref") || !j["graph_ref"].is_string() ||
      j["graph_ref"].get<std::string>() != graph_ref(g)) {
    throw UsageError("class file does not match this moment graph");
  }
  if (!j.contains("values") || !j["values"].is_object()) {
    throw UsageError("class file is missing its values object");
  }
  GkmClass out(&g);
  for (const auto& [key, val] : j["values"].items()) {
    std::size_t pos = 0;
    int v = -1;
    try {
      v = std::stoi(key, &pos);
    } catch (const std::exception&) {
      throw UsageError("class value key is not a vertex id: " + key);
    }
    if (pos != key.size() || v < 0 || v >= g.vertex_count()) {
      throw UsageError("class value key is not a vertex id: " + key);
    }
    if (!val.is_string()) throw UsageError("class values must be polynomial strings");
    out.set(v, parse_polynomial(val.get<std::string>(), g.rs.ambient_dim));
  }
  return out;
}

}  // namespace gkm
