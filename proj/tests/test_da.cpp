#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/da.hpp"

using namespace twocat;
using fixtures::ideal;

namespace {

std::vector<std::string> strs(const std::vector<Ideal>& v) {
  std::vector<std::string> out;
  for (const auto& i : v) out.push_back(i.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cell structure from summand tables") {
  // 0 o 0 = 0 + 1, 1 o anything = 1: 1 is above 0 on both sides.
  std::vector<std::vector<std::vector<int>>> s = {{{0, 1}, {1}}, {{1}, {1}}};
  auto c = cell_structure({"x", "y"}, s);
  CHECK(c.left_geq[1][0]);
  CHECK_FALSE(c.left_geq[0][1]);
  CHECK(c.two_cells.size() == 2);
  CHECK(c.all_singletons());

  std::vector<std::vector<std::vector<int>>> t = {{{1}, {0}}, {{0}, {1}}};
  auto d = cell_structure({"x", "y"}, t);
  CHECK(d.two_cells.size() == 1);
  CHECK_FALSE(d.all_singletons());
}

TEST_CASE("indecomposable ideals of A_2") {
  auto a = fixtures::linear_algebra(2);
  auto ind = indecomposable_one_morphisms(a);
  auto expect = strs({ideal(a, {"e:1"}), ideal(a, {"e:2"}), ideal(a, {"a1"}), Ideal::unit(a)});
  CHECK(strs(ind) == expect);
  CHECK(cells_DA(a).all_singletons());

  auto st = classify_simple_transitive_DA(a);
  CHECK(st.size() == 3);
  for (std::size_t x = 0; x < st.size(); ++x) {
    for (const auto& g : st[x].ideal.generators()) CHECK(a->length(g) == 0);
    for (std::size_t y = x + 1; y < st.size(); ++y) CHECK(st[x].character != st[y].character);
  }
}

TEST_CASE("cells and simple transitive classes over the corpus") {
  for (const auto& q : tree_quiver_corpus(4)) {
    auto a = make_algebra(q);
    CHECK(cells_DA(a).all_singletons());
    auto st = classify_simple_transitive_DA(a);
    auto ideals = enumerate_ideals(a);
    for (const auto& s : st) {
      CHECK(is_idempotent(s.ideal));
      for (const auto& g : s.ideal.generators()) CHECK(a->length(g) == 0);
      std::vector<Ideal> supersets;
      for (const auto& j : ideals)
        if (s.ideal.subset_of(j)) supersets.push_back(j);
      CHECK(strs(s.stabilizer) == strs(supersets));
    }
  }
}

TEST_CASE("canonical cell representatives") {
  auto a2 = fixtures::linear_algebra(2);
  CHECK(cell_rep_canonical(ideal(a2, {"a1"})) == ideal(a2, {"e:2"}));
  auto ex = fixtures::example_algebra();
  CHECK(cell_rep_canonical(ideal(ex, {"delta.beta"})) == ideal(ex, {"e:5"}));
  CHECK(cell_rep_canonical(Ideal::unit(ex)) == Ideal::unit(ex));
}

TEST_CASE("unitors are isomorphisms") {
  auto ex = fixtures::example_algebra();
  auto a = identity_bimodule(ex);
  auto m = ideal_bimodule(ideal(ex, {"beta", "e:4"}));
  auto am = tensor_full(a, m);
  auto ma = tensor_full(m, a);
  auto l = left_unitor(ex, am, m);
  auto r = right_unitor(ex, ma, m);
  CHECK(is_bimodule_map(am.module, m, l));
  CHECK(is_bimodule_map(ma.module, m, r));
  CHECK(is_invertible(l));
  CHECK(is_invertible(r));
}

TEST_CASE("center of D_A is trivial") {
  auto a2 = fixtures::linear_algebra(2);
  auto rep = center_DA(a2);
  CHECK(rep.ok());
  bool found = false;
  for (const auto& w : rep.witnesses)
    if (w.ideal == ideal(a2, {"e:1"}) && w.witness == ideal(a2, {"e:2"})) found = true;
  CHECK(found);

  for (const auto& q : tree_quiver_corpus(4)) {
    auto a = make_algebra(q);
    auto r = center_DA(a);
    CHECK(r.ok());
    CHECK(r.counterexamples.empty());
    CHECK(r.unit_end_dim == 1);
    for (const auto& u : r.unit_scalars) {
      REQUIRE(u.k.has_value());
      CHECK(*u.k == Rational(1));
      CHECK(u.matches_unit);
    }
  }
}

TEST_CASE("splitting of unit direct sums") {
  auto ex = fixtures::example_algebra();
  auto data = unit_direct_sum_data(ex, 2);
  CHECK(splitting_check(data));
  auto bad = data;
  auto& d = bad.back();
  Matrix<Rational> x(d.project_after[1].rows(), d.project_before[0].rows());
  x(0, 0) = Rational(1);
  d.theta = d.theta + d.inject_after[1] * x * d.project_before[0];
  CHECK_FALSE(splitting_check(bad));
  CHECK_THROWS_AS(splitting_check({SplitDatum{}}), std::invalid_argument);
}
