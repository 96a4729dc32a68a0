#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "roots.hpp"
#include "util.hpp"

using namespace gkm;

namespace {

const std::vector<std::pair<Family, int>> kAllSystems = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
    {Family::B, 2}, {Family::B, 3}, {Family::B, 4},
    {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
    {Family::D, 2}, {Family::D, 3}, {Family::D, 4},
};

Limits wide_limits() {
  Limits lims;
  lims.max_reduced_word_length = 24;
  return lims;
}

}  // namespace

TEST_CASE("family names round-trip and reject junk") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    CHECK(family_from_string(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_string("E"), UsageError);
  CHECK_THROWS_AS(family_from_string(""), UsageError);
}

TEST_CASE("group orders and positive root counts match the classical formulas") {
  for (const auto& [fam, rank] : kAllSystems) {
    CAPTURE(family_name(fam), rank);
    RootSystem R = build_root_system(fam, rank);
    CHECK(R.rank == rank);
    CHECK(enumerate_group(R, wide_limits()).size() == oracle::group_order(fam, rank));
    CHECK(static_cast<int>(R.positive_roots.size()) == oracle::positive_root_count(fam, rank));
    CHECK(static_cast<int>(R.simple_roots.size()) == rank);
  }
}

TEST_CASE("every positive root is positive and recognized") {
  for (const auto& [fam, rank] : kAllSystems) {
    RootSystem R = build_root_system(fam, rank);
    for (const Root& r : R.positive_roots) {
      CHECK(r.leading_sign() == 1);
      CHECK(R.is_positive_root(r));
      CHECK(R.is_root(r.negated()));
      CHECK(!R.is_positive_root(r.negated()));
      CHECK(R.positive_index(r) == R.positive_index(r.negated()));
      // The simple-coordinate expansion reassembles the root.
      const std::vector<int>& coords = R.coords_on_simples(r);
      Root sum{std::vector<int>(R.ambient_dim, 0)};
      for (int i = 0; i < rank; ++i) {
        for (int k = 0; k < R.ambient_dim; ++k) {
          sum.coords[k] += coords[i] * R.simple_roots[i].coords[k];
        }
      }
      CHECK(sum == r);
    }
  }
}

TEST_CASE("length, descents, and inverses behave like a Coxeter group") {
  for (const auto& [fam, rank] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 2}, {Family::C, 3},
                                           {Family::D, 3}}) {
    CAPTURE(family_name(fam), rank);
    RootSystem R = build_root_system(fam, rank);
    std::vector<WeylElement> group = enumerate_group(R, wide_limits());
    for (const WeylElement& w : group) {
      CHECK(compose(w, inverse(w)).is_identity());
      CHECK(R.length(inverse(w)) == R.length(w));
      CHECK(static_cast<int>(R.inversions(w, ParabolicJ({}, rank)).size()) == R.length(w));
      for (int i = 1; i <= rank; ++i) {
        int with = R.length(compose(R.simple(i), w));
        CHECK(std::abs(with - R.length(w)) == 1);
        CHECK(R.is_left_descent(w, i) == (with < R.length(w)));
        CHECK(R.is_right_descent(w, i) ==
              (R.length(compose(w, R.simple(i))) < R.length(w)));
      }
    }
  }
}

TEST_CASE("canonical words multiply back to their elements") {
  for (const auto& [fam, rank] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::D, 3}}) {
    RootSystem R = build_root_system(fam, rank);
    for (const WeylElement& w : enumerate_group(R, wide_limits())) {
      std::vector<int> word = R.canonical_word(w);
      CHECK(static_cast<int>(word.size()) == R.length(w));
      CHECK(R.from_word(word) == w);
    }
  }
}

TEST_CASE("element text round-trips") {
  RootSystem R = build_root_system(Family::B, 3);
  for (const WeylElement& w : enumerate_group(R, wide_limits())) {
    CHECK(R.parse_element(R.element_text(w)) == w);
  }
  CHECK(R.element_text(R.identity()) == "e");
  CHECK_THROWS_AS(R.parse_element("s1*junk"), UsageError);
  CHECK_THROWS_AS(R.parse_element("s9"), UsageError);
  CHECK_THROWS_AS(R.parse_element(""), UsageError);
}

TEST_CASE("the longest element is unique, maximal, and an involution on roots") {
  for (const auto& [fam, rank] : kAllSystems) {
    CAPTURE(family_name(fam), rank);
    RootSystem R = build_root_system(fam, rank);
    WeylElement w0 = R.longest_element();
    CHECK(R.length(w0) == static_cast<int>(R.positive_roots.size()));
    CHECK(compose(w0, w0).is_identity());
    // w0 sends every positive root to a negative one.
    for (const Root& r : R.positive_roots) CHECK(apply(w0, r).leading_sign() == -1);
    for (int i = 1; i <= rank; ++i) {
      int conj = R.w0_conjugate_index(i);
      CHECK(compose(compose(w0, R.simple(i)), w0) == R.simple(conj));
    }
  }
}

TEST_CASE("reduced word enumeration matches known counts") {
  RootSystem A2 = build_root_system(Family::A, 2);
  RootSystem A3 = build_root_system(Family::A, 3);
  Limits lims = wide_limits();
  CHECK(reduced_words(A2, A2.longest_element(), lims).all.size() == 2);
  CHECK(reduced_words(A3, A3.identity(), lims).all.size() == 1);
  ReducedWords rw = reduced_words(A3, A3.longest_element(), lims);
  CHECK(rw.all.size() == 16);
  CHECK(std::count(rw.all.begin(), rw.all.end(), rw.canonical) == 1);
  CHECK(std::is_sorted(rw.all.begin(), rw.all.end()));
  for (const auto& word : rw.all) {
    CHECK(word.size() == 6);
    CHECK(A3.from_word(word) == A3.longest_element());
  }
}

TEST_CASE("minimal coset representatives") {
  RootSystem R = build_root_system(Family::A, 3);
  Limits lims = wide_limits();
  std::vector<WeylElement> group = enumerate_group(R, lims);
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<int> idx;
    for (int i = 1; i <= 3; ++i) {
      if (mask & (1u << (i - 1))) idx.push_back(i);
    }
    ParabolicJ J(idx, 3);
    CAPTURE(J.str());
    std::set<WeylElement> reps;
    for (const WeylElement& w : group) {
      WeylElement rep = R.minimal_rep(w, J);
      CHECK(R.is_minimal_rep(rep, J));
      // No right descent inside J.
      for (int j : J.indices) CHECK(!R.is_right_descent(rep, j));
      // rep and w differ by an element of W_J.
      WeylElement h = compose(inverse(rep), w);
      WeylElement reduced = h;
      for (bool progress = true; progress && !reduced.is_identity();) {
        progress = false;
        for (int j : J.indices) {
          if (R.is_left_descent(reduced, j)) {
            reduced = compose(R.simple(j), reduced);
            progress = true;
          }
        }
      }
      CHECK(reduced.is_identity());
      reps.insert(rep);
    }
    // |W^J| * |W_J| = |W|.
    std::uint64_t order_wj = 1;
    {
      // Enumerate W_J by closure under its generators.
      std::set<WeylElement> sub{R.identity()};
      for (bool grew = true; grew;) {
        grew = false;
        for (const WeylElement& w : std::vector<WeylElement>(sub.begin(), sub.end())) {
          for (int j : J.indices) {
            if (sub.insert(compose(w, R.simple(j))).second) grew = true;
          }
        }
      }
      order_wj = sub.size();
    }
    CHECK(reps.size() * order_wj == group.size());
    // The library enumerates the same set without touching W, sorted by length.
    std::vector<WeylElement> mins = enumerate_min_reps(R, J, lims);
    CHECK(mins.size() == reps.size());
    for (std::size_t k = 0; k < mins.size(); ++k) {
      CHECK(reps.count(mins[k]) == 1);
      if (k > 0) CHECK(R.length(mins[k - 1]) <= R.length(mins[k]));
    }
  }
}

TEST_CASE("levi membership separates parabolic root directions") {
  RootSystem R = build_root_system(Family::A, 2);
  ParabolicJ J({2}, 2);
  CHECK(R.in_levi_span(R.alpha(2), J));
  CHECK(!R.in_levi_span(R.alpha(1), J));
  Root high{{1, 0, -1}};
  CHECK(!R.in_levi_span(high, J));
  CHECK(R.negative_roots_outside_levi(J).size() == 2);
}

TEST_CASE("enumeration respects resource caps") {
  RootSystem R = build_root_system(Family::A, 4);
  Limits tight;
  tight.max_group_order = 10;
  CHECK_THROWS_AS(enumerate_group(R, tight), ResourceError);
  CHECK_THROWS_AS(enumerate_group(build_root_system(Family::A, 9), tight), ResourceError);
  CHECK_THROWS_AS(build_root_system(Family::D, 1), UsageError);
  CHECK_THROWS_AS(build_root_system(Family::A, 0), UsageError);
}
