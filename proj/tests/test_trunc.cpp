#include "doctest.h"
#include "twocat/trunc.hpp"

using namespace twocat;
using TM = TruncMorphism;

namespace {

std::vector<Cyclo> vec(std::initializer_list<long> xs) {
  std::vector<Cyclo> v;
  for (long x : xs) v.push_back(Cyclo(x));
  return v;
}

}  // namespace

TEST_CASE("multivariate polynomials") {
  auto x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  auto p = x * x + y.scaled(Rational(2)) - MPoly::constant(2, Rational(3));
  CHECK(p.degree_in(0) == 2);
  CHECK(p.evaluate({Rational(2), Rational(1, 2)}) == Rational(2));
  auto q = p.substitute(0, y + MPoly::constant(2, Rational(1)));
  CHECK(q.evaluate({Rational(0), Rational(2)}) == Rational(10));
  Rational c;
  MPoly rest;
  CHECK(p.split_linear(1, c, rest));
  CHECK(c == 2);
  CHECK_FALSE(p.split_linear(0, c, rest));
  CHECK((x - x).is_zero());
  CHECK(p.str() == "a1^2 + 2*a2 - 3");
}

TEST_CASE("Hom spaces between twisted bimodules") {
  TruncParams t(3, 2);
  CHECK(hom_trunc(t, 0, 2).basis.size() == 3);
  CHECK(hom_trunc(t, 0, 1).basis.size() == 1);
  CHECK(hom_trunc(t, 1, 1).basis[0] == TM::identity(t, 1));
  for (int k = 2; k <= 4; ++k)
    for (int d = 2; d <= 4; ++d) {
      TruncParams p(k, d);
      for (int i = 0; i < d; ++i) {
        CHECK(validate(twisted_D(p, i)).empty());
        for (int j = 0; j < d; ++j) {
          auto h = hom_trunc(p, i, j);
          CHECK(h.engine_agrees);
          CHECK(h.engine_dim == (i == j ? static_cast<std::size_t>(k) : 1u));
        }
      }
    }
  CHECK_THROWS_AS(TruncParams(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(TM::p(t, 0, 2), std::invalid_argument);
}

TEST_CASE("horizontal composition formulas") {
  TruncParams t(3, 4);
  CHECK(whisker_left(t, 1, TM::q(t, 1)) == TM::q(t, 2));
  CHECK(whisker_right(t, TM::q(t, 1), 1) == TM::q(t, 2).scaled(t.zeta()));
  CHECK(whisker_right(t, TM::p(t, 0, 1), 1) == TM::p(t, 1, 2).scaled(t.zeta(t.k - 1)));
  CHECK(whisker_left(t, 2, TM::p(t, 0, 1)) == TM::p(t, 2, 3));
  CHECK(horizontal(t, TM::identity(t, 1), TM::identity(t, 2)) == TM::identity(t, 3));

  TruncParams t23(2, 3);
  CHECK(whisker_right(t23, TM::q(t23, 1), 2) == TM::q(t23, 0).scaled(t23.zeta(2)));
  CHECK(row_matrix(t23, whisker_right(t23, TM::q(t23, 1), 2)) ==
        horizontal_by_tensor(t23, TM::q(t23, 1), TM::identity(t23, 2)));

  // F_0 is the unit.
  for (const auto& f : generators(t)) {
    CHECK(whisker_left(t, 0, f) == f);
    CHECK(whisker_right(t, f, 0) == f);
  }
}

TEST_CASE("relations and the interchange law") {
  for (int k = 2; k <= 5; ++k)
    for (int d = 2; d <= 5; ++d) {
      TruncParams t(k, d);
      CHECK(quiver_QD(t).ok());
      auto gens = generators(t);
      for (const auto& f : gens)
        for (const auto& g : gens) {
          if (k > 3 || d > 3) continue;
          // (f o0 id) o1 (id o0 g) against (id o0 g) o1 (f o0 id)
          auto other = vertical(t, whisker_right(t, f, g.target), whisker_left(t, f.source, g));
          CHECK(horizontal(t, f, g) == other);
        }
    }
}

TEST_CASE("horizontal oracle") {
  for (int k = 2; k <= 3; ++k)
    for (int d = 2; d <= 3; ++d) {
      auto rep = horizontal_oracle(TruncParams(k, d));
      CHECK(rep.ok());
      if (!rep.mismatches.empty()) MESSAGE(rep.mismatches.front());
    }
}

TEST_CASE("quiver Q^D") {
  auto q = quiver_QD(TruncParams(2, 3));
  CHECK(q.loops.size() == 3);
  CHECK(q.arrows.size() == 6);
  CHECK(q.length_two_paths == q.zero_length_two_paths);
  auto q4 = quiver_QD(TruncParams(2, 4));
  CHECK(q4.loops.size() == 4);
  CHECK(q4.arrows.size() == 12);
  CHECK(q4.length_two_paths == q4.zero_length_two_paths);
  auto q32 = quiver_QD(TruncParams(3, 2));
  CHECK(q32.ok());
  CHECK(q32.zero_length_two_paths < q32.length_two_paths);
  CHECK(q.dot().find("p_{1,0}") != std::string::npos);
}

TEST_CASE("simple transitive V_r") {
  auto v = simple_transitive_Vr(4, 2);
  CHECK(v.matrices[1] == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(v.matrices[2] == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(v.transitive);
  CHECK(v.periodic);
  auto one = simple_transitive_Vr(4, 1);
  for (const auto& m : one.matrices) CHECK(m == std::vector<std::vector<int>>{{1}});
  CHECK(simple_transitive_Vr(4, 4).matrices[1].size() == 4);
  CHECK_THROWS_AS(simple_transitive_Vr(4, 3), std::invalid_argument);
}

TEST_CASE("center condition") {
  TruncParams t32(3, 2);
  CHECK(center_condition(t32, vec({1, 2, 2})));
  CHECK_FALSE(center_condition(t32, vec({1, 2, 1})));
  CHECK_THROWS_AS(center_condition(t32, vec({2, 2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(center_condition(t32, vec({1, 2})), std::invalid_argument);
  for (int d = 2; d <= 5; ++d)
    for (int k = 2; k <= 5; ++k) {
      TruncParams t(k, d);
      std::size_t passed = 0;
      for (const auto& a : center_corpus(t, 24, 7u * k + d)) {
        bool c = center_condition(t, a);
        CHECK(c == center_condition_diagonalizable(t, a));
        if (k <= d) CHECK(c);
        passed += c;
        auto phis = reconstruct_phi(t, a);
        for (int s = 0; s <= d; ++s) CHECK(phis[s] == phi_closed(t, a, s));
        CHECK((phis[d] == CMatrix::identity(k)) == c);
      }
      CHECK(passed >= 12);
    }
}

TEST_CASE("center Hom spaces") {
  TruncParams t(2, 2);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      auto sols = center_hom(t, vec({1, a}), vec({1, b}));
      REQUIRE(sols.size() == 1);
      Cyclo scale = sols[0][0].inverse();
      CHECK(sols[0][1] * scale == Cyclo(Rational(b - a, 2)));
    }
  TruncParams t23(2, 3);
  auto sols = center_hom(t23, vec({1, 1}), vec({1, 5}));
  CHECK(sols.size() == 1);

  // Composition of Hom solutions.
  TruncParams t42(4, 2);
  auto corpus = center_corpus(t42, 12, 99);
  std::vector<std::vector<Cyclo>> good;
  for (const auto& a : corpus)
    if (center_condition(t42, a)) good.push_back(a);
  REQUIRE(good.size() >= 3);
  CMatrix d = CMatrix::diagonal(t42.zeta_vector());
  for (const auto& l1 : center_hom(t42, good[0], good[1]))
    for (const auto& l2 : center_hom(t42, good[1], good[2])) {
      CMatrix m = toeplitz(l1) * toeplitz(l2);
      CHECK(d * toeplitz(good[0]) * m == m * d * toeplitz(good[2]));
    }
  CHECK(center_hom(t42, good[0], good[0]).size() >= 1);
}

TEST_CASE("block center objects") {
  TruncParams t(2, 2);
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      CenterObject o{{{vec({1, 1}), vec({0, x})}, {vec({0, y}), vec({1, -2})}}};
      CHECK(center_condition_block(t, o));
      CHECK(center_condition_block_diagonalizable(t, o));
    }
  CenterObject single{{{vec({1, 2, 2})}}};
  TruncParams t32(3, 2);
  CHECK(center_condition_block(t32, single) == center_condition(t32, vec({1, 2, 2})));
  CenterObject bad{{{vec({1, 1}), vec({1, 0})}, {vec({0, 0}), vec({1, 0})}}};
  CHECK_THROWS_AS(center_condition_block(t, bad), std::invalid_argument);

  CenterObject one{{{vec({1, 3})}}};
  CenterObject two{{{vec({1, 1}), vec({0, 2})}, {vec({0, 0}), vec({1, 3})}}};
  auto homs = center_hom_block(t, one, two);
  CHECK_FALSE(homs.empty());
  CMatrix ds = block_D(t, 1), dt = block_D(t, 2);
  for (const auto& m : homs) CHECK(ds * one.matrix(t) * m == m * dt * two.matrix(t));
}

TEST_CASE("d = 2 parametrisation") {
  auto c2 = enumerate_center_d2(2);
  CHECK(c2.free == std::vector<int>{1});
  CHECK(c2.determined.empty());
  auto c3 = enumerate_center_d2(3);
  CHECK(c3.free == std::vector<int>{1});
  REQUIRE(c3.determined.count(2));
  CHECK(c3.determined.at(2) == MPoly::variable(2, 0) * MPoly::variable(2, 0) * MPoly::constant(2, Rational(1, 2)));
  for (int k = 2; k <= 8; ++k) {
    auto c = enumerate_center_d2(k);
    CHECK(c.identity_after_substitution);
    CHECK(static_cast<int>(c.free.size()) == k / 2);
    for (int j : c.free) CHECK(j % 2 == 1);
    // Substituting integer values of the free parameters satisfies the condition.
    TruncParams t(k, 2);
    std::vector<Rational> values(k - 1, Rational(0));
    for (int j : c.free) values[j - 1] = Rational(j + 1, 3);
    std::vector<Cyclo> a{Cyclo(1)};
    for (int j = 1; j < k; ++j) {
      auto it = c.determined.find(j);
      a.push_back(it == c.determined.end() ? Cyclo(values[j - 1]) : Cyclo(it->second.evaluate(values)));
    }
    CHECK(center_condition(t, a));
  }
}

TEST_CASE("classification guard") {
  for (int k = 2; k <= 4; ++k)
    for (int d = 2; d <= 4; ++d) {
      auto rep = center_classification_guard(TruncParams(k, d));
      CHECK(rep.ok());
      if (!rep.unexpected.empty()) MESSAGE(rep.unexpected.front());
    }
  auto rep = center_classification_guard(TruncParams(2, 2));
  REQUIRE(rep.cases.size() == 5);
  CHECK(rep.cases[0].solvable);
  CHECK_FALSE(rep.cases[1].solvable);
  CHECK(rep.cases[1].q_kills_diagonal);
  CHECK_FALSE(rep.cases[3].solvable);  // F_0 + F_1
}
