#pragma once

#include <map>
#include <optional>
#include <utility>

#include <json.hpp>

#include "graph.hpp"

namespace gkm {

// An equivariant cohomology class presented by its localizations: one
// polynomial per vertex, with only the nonzero ones stored.  The zero class
// has an explicitly empty support.  Entries are kept sorted by vertex id.
class GkmClass {
 public:
  using Entry = std::pair<int, Polynomial>;

  GkmClass() = default;
  explicit GkmClass(const MomentGraph* g) : graph_(g) {}

  const MomentGraph* graph() const { return graph_; }
  const std::vector<Entry>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  Polynomial value(int v) const;
  // Fast accessor: null when the vertex carries no (i.e. a zero) value.
  const Polynomial* find(int v) const;
  void set(int v, Polynomial p);
  // set() for callers inserting in ascending vertex order (skips the lookup).
  void append(int v, Polynomial p);

  // Common homogeneous degree of all localizations; nullopt when mixed or
  // when the class is zero.
  std::optional<int> degree() const;

  GkmClass& operator+=(const GkmClass& o);
  GkmClass& operator-=(const GkmClass& o);
  friend GkmClass operator+(GkmClass a, const GkmClass& b) { return a += b; }
  friend GkmClass operator-(GkmClass a, const GkmClass& b) { return a -= b; }
  friend GkmClass operator*(const GkmClass& a, const GkmClass& b);  // pointwise
  GkmClass scaled(const Polynomial& c) const;
  GkmClass operator-() const;
  bool operator==(const GkmClass& o) const;

 private:
  const MomentGraph* graph_ = nullptr;
  std::vector<Entry> values_;
};

struct GkmViolation {
  int edge = 0;               // index into graph.edges
  Polynomial difference;      // p(src) - p(dst)
  Polynomial remainder;       // witness of failed divisibility
};

struct GkmReport {
  bool pass = true;
  std::vector<GkmViolation> violations;
};

// Check every edge divisibility condition exactly.
GkmReport verify_gkm(const GkmClass& p);

// Localization p_w(v) of the flow-up class of w at v, by the subword sum
// over the canonical reduced word of v (or a caller-supplied one).
Polynomial billey_localize(const RootSystem& R, const WeylElement& w, const WeylElement& v);
Polynomial billey_localize(const RootSystem& R, const WeylElement& w, const std::vector<int>& v_word);
// One pass over v's word yielding p_u(v) for every u at once.
std::unordered_map<WeylElement, Polynomial, WeylHash> billey_localize_all(const RootSystem& R,
                                                                   const WeylElement& v);

// The flow-up basis of a moment graph, indexed by vertex id.
struct FlowUpBasis {
  const MomentGraph* graph = nullptr;
  std::vector<GkmClass> classes;
  std::vector<std::vector<Root>> pivot_roots;  // Inv^P of each vertex
  std::vector<Polynomial> pivots;              // product of those roots
};

FlowUpBasis flowup_basis(const MomentGraph& g);
// Same basis produced top-down by divided differences from the top class.
FlowUpBasis generate_from_top(const MomentGraph& g);

// w . p, acting on both sides: (w.p)([v]) = w(p([w^{-1} v])).
GkmClass weyl_act(const WeylElement& w, const GkmClass& p);

// Divided difference delta_i(p) = (p - s_i.p)/alpha_i, pointwise.
GkmClass delta(int i, const GkmClass& p);
// Apply delta along a word, leftmost letter first.
GkmClass delta_word(const std::vector<int>& word, const GkmClass& p);

// The right-sided operator (p(v) - p(v s_i)) / (-v(alpha_i)); only defined
// on the full flag graph.
GkmClass kk_partial(int i, const GkmClass& p);

// Expand p over the flow-up basis: p = sum c_v p_v with polynomial
// coefficients, found by triangular elimination in vertex order.  Throws
// VerificationError when p is not in the span.
std::map<int, Polynomial> decompose(const GkmClass& p, const FlowUpBasis& basis);

// Structure constants of p_u * p_v; ordinary = constant terms (all integers).
std::map<int, Polynomial> structure_constants(const FlowUpBasis& basis, int u, int v,
                                              bool equivariant);

nlohmann::json class_to_json(const GkmClass& p);
GkmClass class_from_json(const MomentGraph& g, const nlohmann::json& j);

}  // namespace gkm
