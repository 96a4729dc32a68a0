#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "gkm.hpp"

namespace gkm {

// A Schubert polynomial representative together with its expansion in the
// simple-root coordinates.
struct SchubertPolynomial {
  WeylElement owner;
  Polynomial poly;
  AlphaExpansion basis_form;
};

// Reduction modulo the ideal I of W-invariants vanishing at the origin,
// performed through BGG divided difference chains; also the source of the
// BGG Schubert polynomials themselves.
class IdealReducer {
 public:
  explicit IdealReducer(const RootSystem& R, const Limits& limits = {});

  const RootSystem& root_system() const { return rs_; }
  const WeylElement& longest() const { return w0_; }
  int degree_bound() const { return degree_bound_; }
  // The constant S_e produced by the full chain; divides every extracted
  // coefficient.  Computed, not assumed, and always positive.
  const Rational& normalizer() const { return normalizer_; }
  const std::vector<WeylElement>& group() const { return group_; }

  // S_w: the top polynomial prod(positive roots)/|W| pushed down by the
  // divided difference chain of the canonical word of w0 * w.
  SchubertPolynomial bgg_schubert(const WeylElement& w) const;

  // Coefficients of homogeneous f on the degree-d Schubert basis, one entry
  // per w with l(w) = d (zeros included); empty when d exceeds l(w0).
  std::map<WeylElement, Rational> schubert_coefficients_mod_I(const Polynomial& f, int d) const;

  // Membership in I for a homogeneous polynomial: every Schubert
  // coefficient at its degree vanishes.
  bool in_ideal(const Polynomial& f) const;

 private:
  RootSystem rs_;
  WeylElement w0_;
  int degree_bound_ = 0;
  Polynomial top_;
  Rational normalizer_;
  std::vector<WeylElement> group_;
};

// Cadman's averaging map on the full flag graph: (sum of all
// localizations)/|W|.  Parabolic input is a usage error.
Polynomial kappa(const GkmClass& p);

// The Grassmannian Schubert polynomial of [w], w in W^J, computed without
// the full flag basis: sum the localizations of p_{w^{-1}} over the
// minimal-length representatives of the left cosets, symmetrize over W_J,
// divide by |W|.
Polynomial kappa_parabolic(const RootSystem& R, const ParabolicJ& J, const WeylElement& w,
                           const Limits& limits = {});
SchubertPolynomial grassmannian_schubert(const RootSystem& R, const ParabolicJ& J,
                                         const WeylElement& w, const Limits& limits = {});

struct ProductIdentityReport {
  std::string u;
  std::string v;
  std::map<std::string, long long> constants;  // nonzero ordinary constants
  bool in_ideal = false;
};

// Check S_u * S_v = sum c S_w modulo I, with the c taken from the moment
// graph structure constants.
ProductIdentityReport verify_product_identity(const FlowUpBasis& basis, const IdealReducer& reducer,
                                              int u, int v, const Limits& limits = {});
nlohmann::json report_to_json(const ProductIdentityReport& r);

}  // namespace gkm
