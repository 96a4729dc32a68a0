#include <map>
#include <random>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "gkm.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace gkm;

namespace {

struct Space {
  Family family;
  int rank;
  std::vector<int> parabolic;
};

const std::vector<Space> kSpaces = {
    {Family::A, 2, {}},
    {Family::B, 2, {}},
    {Family::A, 3, {1, 3}},
    {Family::C, 2, {1}},
};

Polynomial product_of(const std::vector<Root>& roots, int dim) {
  Polynomial p = Polynomial::one(dim);
  for (const Root& r : roots) p = p * Polynomial::from_root(r);
  return p;
}

}  // namespace

TEST_CASE("flow-up classes localize to the brute-force subword sums") {
  for (const Space& s : kSpaces) {
    CAPTURE(family_name(s.family), s.rank, ParabolicJ(s.parabolic, s.rank).str());
    RootSystem R = build_root_system(s.family, s.rank);
    MomentGraph g = build_generic(R, ParabolicJ(s.parabolic, s.rank));
    FlowUpBasis basis = flowup_basis(g);
    REQUIRE(basis.classes.size() == static_cast<std::size_t>(g.vertex_count()));
    for (int w = 0; w < g.vertex_count(); ++w) {
      const WeylElement& wrep = g.vertices[w].coset.min_rep;
      for (int v = 0; v < g.vertex_count(); ++v) {
        const WeylElement& vrep = g.vertices[v].coset.min_rep;
        CHECK(basis.classes[w].value(v) == oracle::billey_sum(R, wrep, vrep));
        // Upward support: nonzero exactly on the Bruhat interval above w.
        CHECK((basis.classes[w].find(v) != nullptr) == oracle::bruhat_leq(R, wrep, vrep));
      }
      // The diagonal value is the recorded pivot, the product of its roots.
      CHECK(basis.pivots[w] == basis.classes[w].value(w));
      CHECK(basis.pivots[w] == product_of(basis.pivot_roots[w], R.ambient_dim));
      CHECK(basis.classes[w].degree() == g.vertices[w].coset.length);
      CHECK(verify_gkm(basis.classes[w]).pass);
    }
  }
}

TEST_CASE("localization is independent of the chosen reduced word") {
  RootSystem R = build_root_system(Family::A, 3);
  std::vector<WeylElement> group = enumerate_group(R, Limits{});
  WeylElement w0 = R.longest_element();
  WeylElement w = R.parse_element("s2*s1*s3");
  for (const auto& word : reduced_words(R, w0, Limits{}).all) {
    CHECK(billey_localize(R, w, word) == billey_localize(R, w, w0));
  }
  // The batched form agrees with the one-at-a-time form.
  for (const WeylElement& v : group) {
    auto all = billey_localize_all(R, v);
    for (const WeylElement& u : group) {
      Polynomial one = billey_localize(R, u, v);
      auto it = all.find(u);
      if (it == all.end()) {
        CHECK(one.is_zero());
      } else {
        CHECK(one == it->second);
      }
    }
  }
}

TEST_CASE("gkm verification pinpoints edges that fail divisibility") {
  RootSystem R = build_root_system(Family::A, 2);
  MomentGraph g = build_generic(R, ParabolicJ({1}, 2));
  REQUIRE(g.vertex_count() == 3);
  GkmClass bad(&g);
  bad.set(1, parse_polynomial("t1 - t2", 3));
  bad.set(2, parse_polynomial("t2 - t3", 3));
  GkmReport report = verify_gkm(bad);
  CHECK(!report.pass);
  CHECK(!report.violations.empty());
  for (const GkmViolation& viol : report.violations) {
    const GraphEdge& e = g.edges[viol.edge];
    CHECK(viol.difference == bad.value(e.src) - bad.value(e.dst));
    CHECK(!viol.remainder.is_zero());
    CHECK(!divide_linear(viol.difference, e.label).divisible);
  }
  FlowUpBasis basis = flowup_basis(g);
  CHECK_THROWS_AS(decompose(bad, basis), VerificationError);

  // Swapping in edge-compatible values makes a genuine class.
  GkmClass good(&g);
  good.set(1, parse_polynomial("t2 - t3", 3));
  good.set(2, parse_polynomial("t1 - t3", 3));
  CHECK(verify_gkm(good).pass);
  CHECK(verify_gkm(GkmClass(&g)).pass);
}

TEST_CASE("decompose inverts flow-up combinations exactly") {
  RootSystem R = build_root_system(Family::A, 3);
  MomentGraph g = build_generic(R, ParabolicJ({1, 3}, 3));
  FlowUpBasis basis = flowup_basis(g);
  std::mt19937 rng(6021);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, Polynomial> want;
    GkmClass combo(&g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      int c = coeff(rng);
      if (c == 0) continue;
      Polynomial cp = (trial % 2 == 0)
                          ? Polynomial::constant(4, Rational(c))
                          : Polynomial::variable(4, 1 + v % 4).scaled(Rational(c));
      want.emplace(v, cp);
      combo += basis.classes[v].scaled(cp);
    }
    CHECK(decompose(combo, basis) == want);
  }
  CHECK(decompose(GkmClass(&g), basis).empty());
}

TEST_CASE("weyl action is a group action implementing the descent recursion") {
  for (const Space& s : std::vector<Space>{{Family::A, 2, {}}, {Family::C, 2, {1}}}) {
    CAPTURE(family_name(s.family), s.rank, ParabolicJ(s.parabolic, s.rank).str());
    RootSystem R = build_root_system(s.family, s.rank);
    MomentGraph g = build_generic(R, ParabolicJ(s.parabolic, s.rank));
    FlowUpBasis basis = flowup_basis(g);
    std::vector<WeylElement> group = enumerate_group(R, Limits{});
    for (const WeylElement& u : group) {
      for (const WeylElement& v : group) {
        CHECK(weyl_act(u, weyl_act(v, basis.classes[1])) ==
              weyl_act(compose(u, v), basis.classes[1]));
      }
      CHECK(weyl_act(R.identity(), basis.classes[1]) == basis.classes[1]);
    }
    // s_i fixes a class unless its vertex moves down, which reflects it.
    for (int i = 1; i <= s.rank; ++i) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        int u = g.left_action(i)[v];
        GkmClass acted = weyl_act(R.simple(i), basis.classes[v]);
        if (u == v || g.vertices[u].coset.length > g.vertices[v].coset.length) {
          CHECK(acted == basis.classes[v]);
          CHECK(delta(i, basis.classes[v]).is_zero());
        } else {
          GkmClass expect = basis.classes[v] -
                            basis.classes[u].scaled(Polynomial::from_root(R.alpha(i)));
          CHECK(acted == expect);
          CHECK(delta(i, basis.classes[v]) == basis.classes[u]);
        }
      }
    }
  }
}

TEST_CASE("top-down generation reproduces the flow-up basis") {
  for (const Space& s : kSpaces) {
    CAPTURE(family_name(s.family), s.rank, ParabolicJ(s.parabolic, s.rank).str());
    RootSystem R = build_root_system(s.family, s.rank);
    MomentGraph g = build_generic(R, ParabolicJ(s.parabolic, s.rank));
    FlowUpBasis direct = flowup_basis(g);
    FlowUpBasis generated = generate_from_top(g);
    REQUIRE(generated.classes.size() == direct.classes.size());
    for (std::size_t v = 0; v < direct.classes.size(); ++v) {
      CHECK(generated.classes[v] == direct.classes[v]);
      CHECK(generated.pivots[v] == direct.pivots[v]);
    }
  }
}

TEST_CASE("delta along a word chains the single-step operators") {
  RootSystem R = build_root_system(Family::A, 2);
  MomentGraph g = build_generic(R, ParabolicJ({}, 2));
  FlowUpBasis basis = flowup_basis(g);
  const GkmClass& top = basis.classes[g.top_vertex()];
  CHECK(delta_word({1, 2}, top) == delta(2, delta(1, top)));
  CHECK(delta_word({}, top) == top);
  CHECK_THROWS_AS(delta(3, top), UsageError);
}

TEST_CASE("the right-sided operator lives on the full flag graph only") {
  RootSystem R = build_root_system(Family::A, 2);
  MomentGraph full = build_generic(R, ParabolicJ({}, 2));
  FlowUpBasis basis = flowup_basis(full);
  int s2 = full.vertex_of(R.parse_element("s2"));
  REQUIRE(s2 >= 0);
  GkmClass out = kk_partial(2, basis.classes[s2]);
  CHECK(out.value(full.vertex_of(R.identity())) == Polynomial::one(3));

  MomentGraph part = build_generic(R, ParabolicJ({1}, 2));
  FlowUpBasis pbasis = flowup_basis(part);
  CHECK_THROWS_AS(kk_partial(1, pbasis.classes[0]), UsageError);
}

TEST_CASE("structure constants reproduce the classical multiplication tables") {
  RootSystem A2 = build_root_system(Family::A, 2);
  MomentGraph fl3 = build_generic(A2, ParabolicJ({}, 2));
  FlowUpBasis b3 = flowup_basis(fl3);
  int s1 = fl3.vertex_of(A2.parse_element("s1"));
  int s2 = fl3.vertex_of(A2.parse_element("s2"));
  int s1s2 = fl3.vertex_of(A2.parse_element("s1*s2"));
  int s2s1 = fl3.vertex_of(A2.parse_element("s2*s1"));

  std::map<int, Polynomial> ord = structure_constants(b3, s1, s1, false);
  std::map<int, Polynomial> ord_want{{s2s1, Polynomial::one(3)}};
  CHECK(ord == ord_want);

  std::map<int, Polynomial> equi = structure_constants(b3, s1, s1, true);
  std::map<int, Polynomial> equi_want{{s1, parse_polynomial("t1 - t2", 3)},
                                      {s2s1, Polynomial::one(3)}};
  CHECK(equi == equi_want);

  std::map<int, Polynomial> mixed = structure_constants(b3, s1, s2, false);
  std::map<int, Polynomial> mixed_want{{s1s2, Polynomial::one(3)}, {s2s1, Polynomial::one(3)}};
  CHECK(mixed == mixed_want);

  // Structure constants agree with a direct decomposition of the product.
  for (int u : {s1, s2, s1s2}) {
    for (int v : {s1, s2, s2s1}) {
      CHECK(structure_constants(b3, u, v, true) ==
            decompose(b3.classes[u] * b3.classes[v], b3));
    }
  }

  RootSystem A3 = build_root_system(Family::A, 3);
  MomentGraph gr = build_generic(A3, ParabolicJ({1, 3}, 3));
  FlowUpBasis bg = flowup_basis(gr);
  int v_s2 = gr.vertex_of(A3.parse_element("s2"));
  int v_s1s2 = gr.vertex_of(A3.parse_element("s1*s2"));
  int v_s3s2 = gr.vertex_of(A3.parse_element("s3*s2"));
  std::map<int, Polynomial> sq = structure_constants(bg, v_s2, v_s2, true);
  std::map<int, Polynomial> sq_want{{v_s2, parse_polynomial("t2 - t3", 4)},
                                    {v_s1s2, Polynomial::one(4)},
                                    {v_s3s2, Polynomial::one(4)}};
  CHECK(sq == sq_want);
  // The two middle classes are dual: equal squares, vanishing cross terms.
  CHECK(structure_constants(bg, v_s1s2, v_s3s2, false).empty());
  std::map<int, Polynomial> top_want{{gr.top_vertex(), Polynomial::one(4)}};
  CHECK(structure_constants(bg, v_s1s2, v_s1s2, false) == top_want);
  CHECK(structure_constants(bg, v_s3s2, v_s3s2, false) == top_want);

  RootSystem C2 = build_root_system(Family::C, 2);
  MomentGraph lg = build_generic(C2, ParabolicJ({1}, 2));
  FlowUpBasis bl = flowup_basis(lg);
  int l_s2 = lg.vertex_of(C2.parse_element("s2"));
  int l_s1s2 = lg.vertex_of(C2.parse_element("s1*s2"));
  std::map<int, Polynomial> lg_want{{l_s1s2, Polynomial::constant(2, Rational(2))}};
  CHECK(structure_constants(bl, l_s2, l_s2, false) == lg_want);
}

TEST_CASE("class json round-trips and rejects mismatched graphs") {
  RootSystem R = build_root_system(Family::B, 2);
  MomentGraph g = build_generic(R, ParabolicJ({}, 2));
  FlowUpBasis basis = flowup_basis(g);
  for (const GkmClass& p : basis.classes) {
    nlohmann::json j = class_to_json(p);
    CHECK(j["schema_version"] == 1);
    CHECK(j["graph_ref"] == graph_ref(g));
    CHECK(class_from_json(g, j) == p);
  }
  nlohmann::json j = class_to_json(basis.classes[1]);
  MomentGraph other = build_generic(R, ParabolicJ({1}, 2));
  CHECK_THROWS_AS(class_from_json(other, j), UsageError);
  nlohmann::json bad = j;
  bad["schema_version"] = 3;
  CHECK_THROWS_AS(class_from_json(g, bad), UsageError);
  nlohmann::json badkey = j;
  badkey["values"]["99"] = "t1";
  CHECK_THROWS_AS(class_from_json(g, badkey), UsageError);
}

TEST_CASE("class arithmetic is pointwise and keeps entries sparse") {
  RootSystem R = build_root_system(Family::A, 2);
  MomentGraph g = build_generic(R, ParabolicJ({}, 2));
  FlowUpBasis basis = flowup_basis(g);
  const GkmClass& a = basis.classes[1];
  const GkmClass& b = basis.classes[2];
  GkmClass sum = a + b;
  GkmClass prod = a * b;
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(sum.value(v) == a.value(v) + b.value(v));
    CHECK(prod.value(v) == a.value(v) * b.value(v));
    CHECK((a - a).value(v).is_zero());
    CHECK((-a).value(v) == -a.value(v));
  }
  CHECK((a - a).is_zero());
  CHECK((a - a).values().empty());
  GkmClass scaled = a.scaled(parse_polynomial("2*t1", 3));
  for (const auto& [v, val] : scaled.values()) {
    CHECK(val == a.value(v) * parse_polynomial("2*t1", 3));
  }
  GkmClass manual(&g);
  manual.append(0, Polynomial::one(3));
  manual.append(4, parse_polynomial("t1", 3));
  CHECK(manual.find(0) != nullptr);
  CHECK(manual.find(2) == nullptr);
  CHECK(manual.value(2).is_zero());
  CHECK(!manual.degree().has_value());  // mixed degrees across the support
  manual.set(4, Polynomial(3));  // setting zero erases the entry
  CHECK(manual.find(4) == nullptr);
  CHECK(manual.degree() == 0);
  manual.set(0, Polynomial(3));
  CHECK(manual.is_zero());
  CHECK(!manual.degree().has_value());
}
