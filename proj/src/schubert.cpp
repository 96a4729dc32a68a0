#include "schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "util.hpp"

namespace gkm {

IdealReducer::IdealReducer(const RootSystem& R, const Limits& limits) : rs_(R) {
  w0_ = rs_.longest_element();
  degree_bound_ = rs_.length(w0_);
  group_ = enumerate_group(rs_, limits);

  top_ = Polynomial::one(rs_.ambient_dim);
  for (const Root& r : rs_.positive_roots) top_ = top_ * Polynomial::from_root(r);
  top_ = top_.scaled(Rational(1, static_cast<long long>(group_.size())));

  Polynomial chain = top_;
  for (int c : rs_.canonical_word(w0_)) chain = divided_difference(rs_, c, chain);
  if (!chain.is_constant()) {
    throw std::logic_error("full divided difference chain did not reach a constant");
  }
  normalizer_ = chain.constant_term();
  if (normalizer_.sign() <= 0) {
    throw std::logic_error("normalizer of the Schubert basis is not positive");
  }
}

SchubertPolynomial IdealReducer::bgg_schubert(const WeylElement& w) const {
  Polynomial p = top_;
  for (int c : rs_.canonical_word(compose(w0_, w))) p = divided_difference(rs_, c, p);
  return SchubertPolynomial{w, p, alpha_expand(p, rs_)};
}

std::map<WeylElement, Rational> IdealReducer::schubert_coefficients_mod_I(const Polynomial& f,
                                                                          int d) const {
  if (d < 0) throw UsageError("Schubert coefficient degree must be nonnegative");
  if (!f.is_zero()) {
    auto hd = f.homogeneous_degree();
    if (!hd || *hd != d) {
      throw UsageError("polynomial is not homogeneous of the requested degree");
    }
  }
  std::map<WeylElement, Rational> out;
  if (d > degree_bound_) return out;
  for (const WeylElement& w : group_) {
    if (rs_.length(w) != d) continue;
    std::vector<int> word = rs_.canonical_word(w);
    Polynomial g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      g = divided_difference(rs_, *it, g);
    }
    if (!g.is_constant()) {
      throw std::logic_error("coefficient extraction chain did not reach a constant");
    }
    out.emplace(w, g.constant_term() / normalizer_);
  }
  return out;
}

bool IdealReducer::in_ideal(const Polynomial& f) const {
  if (f.is_zero()) return true;
  auto hd = f.homogeneous_degree();
  if (!hd) throw UsageError("ideal membership requires a homogeneous polynomial");
  if (*hd > degree_bound_) return true;
  for (const auto& [w, c] : schubert_coefficients_mod_I(f, *hd)) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Polynomial kappa(const GkmClass& p) {
  const MomentGraph* g = p.graph();
  if (g == nullptr) throw std::logic_error("class has no moment graph");
  if (!g->J.empty()) throw UsageError("kappa is defined on the full flag graph only");
  Polynomial sum(g->rs.ambient_dim);
  for (const auto& [v, val] : p.values()) sum += val;
  return sum.scaled(Rational(1, g->vertex_count()));
}

Polynomial kappa_parabolic(const RootSystem& R, const ParabolicJ& J, const WeylElement& w,
                           const Limits& limits) {
  if (!R.is_minimal_rep(w, J)) {
    throw UsageError("element is not a minimal coset representative for this parabolic");
  }
  WeylElement winv = inverse(w);
  std::vector<WeylElement> right_reps = enumerate_min_reps(R, J, limits);
  Polynomial sum(R.ambient_dim);
  for (const WeylElement& m : right_reps) {
    // inverse(m) runs over the minimal representatives of the left cosets.
    sum += billey_localize(R, winv, inverse(m));
  }
  std::vector<WeylElement> stabilizer = enumerate_parabolic(R, J, limits);
  Polynomial total(R.ambient_dim);
  for (const WeylElement& x : stabilizer) total += apply(x, sum);
  long long order = static_cast<long long>(right_reps.size()) *
                    static_cast<long long>(stabilizer.size());
  return total.scaled(Rational(1, order));
}

SchubertPolynomial grassmannian_schubert(const RootSystem& R, const ParabolicJ& J,
                                         const WeylElement& w, const Limits& limits) {
  Polynomial p = kappa_parabolic(R, J, w, limits);
  return SchubertPolynomial{w, p, alpha_expand(p, R)};
}

ProductIdentityReport verify_product_identity(const FlowUpBasis& basis, const IdealReducer& reducer,
                                              int u, int v, const Limits& limits) {
  const MomentGraph& g = *basis.graph;
  const RootSystem& R = g.rs;
  ProductIdentityReport report;
  report.u = g.vertices.at(u).word;
  report.v = g.vertices.at(v).word;

  auto ordinary = structure_constants(basis, u, v, false);

  Polynomial diff = kappa_parabolic(R, g.J, g.vertices[u].coset.min_rep, limits) *
                    kappa_parabolic(R, g.J, g.vertices[v].coset.min_rep, limits);
  for (const auto& [wid, c] : ordinary) {
    Rational k = c.constant_term();
    if (!k.is_integer()) throw std::logic_error("ordinary structure constant is not an integer");
    report.constants.emplace(g.vertices.at(wid).word, k.num());
    diff -= kappa_parabolic(R, g.J, g.vertices[wid].coset.min_rep, limits).scaled(k);
  }
  report.in_ideal = reducer.in_ideal(diff);
  return report;
}

nlohmann::json report_to_json(const ProductIdentityReport& r) {
  nlohmann::json constants = nlohmann::json::object();
  for (const auto& [w, c] : r.constants) constants[w] = c;
  return nlohmann::json{
      {"schema_version", 1},
      {"u", r.u},
      {"v", r.v},
      {"constants", std::move(constants)},
      {"in_ideal", r.in_ideal},
  };
}

}  // namespace gkm
