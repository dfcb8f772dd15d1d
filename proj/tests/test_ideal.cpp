#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/ideal.hpp"

using namespace twocat;
using fixtures::ideal;

namespace {

// span(I J) by brute force: all products x o y with x in I, y in J.
std::vector<int> product_oracle(const Ideal& i, const Ideal& j) {
  const auto& a = i.algebra();
  std::set<int> out;
  for (int x : span_paths(i))
    for (int y : span_paths(j)) {
      int p = a->compose(x, y);
      if (p >= 0) out.insert(p);
    }
  return {out.begin(), out.end()};
}

// Up-closed path sets, by brute force over all subsets.
std::size_t ideal_count_oracle(const AlgebraPtr& a) {
  int n = a->path_count();
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int p = 0; p < n && closed; ++p) {
      if (!((mask >> p) & 1)) continue;
      for (int q = 0; q < n; ++q)
        if (a->leq(p, q) && !((mask >> q) & 1)) {
          closed = false;
          break;
        }
    }
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("span and minimal generators") {
  auto a2 = fixtures::linear_algebra(2);
  auto ex = fixtures::example_algebra();
  auto names = [](const Ideal& i, const std::vector<int>& ps) {
    std::vector<std::string> s;
    for (int p : ps) s.push_back(i.algebra()->describe(p));
    std::sort(s.begin(), s.end());
    return s;
  };
  Ideal e1 = ideal(a2, {"e:1"});
  CHECK(names(e1, span_paths(e1)) == std::vector<std::string>{"a1", "e:1"});
  Ideal beta = ideal(ex, {"beta"});
  CHECK(names(beta, span_paths(beta)) == std::vector<std::string>{"beta", "beta.alpha", "delta.beta", "delta.beta.alpha"});
  CHECK(span_paths(Ideal::zero(ex)).empty());

  CHECK(ideal(a2, {"e:1", "a1"}) == e1);
  CHECK(ideal(ex, {"beta"}).descriptors() == std::vector<std::string>{"beta"});
  Ideal m = ideal(ex, {"beta.alpha", "delta.beta", "delta.beta.alpha"});
  CHECK(m == ideal(ex, {"beta.alpha", "delta.beta"}));
  // oracle: the generating subsets of the input of least size
  std::vector<int> in{ex->parse("beta.alpha"), ex->parse("delta.beta"), ex->parse("delta.beta.alpha")};
  std::size_t best = in.size();
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<int> sub;
    for (int b = 0; b < 3; ++b)
      if ((mask >> b) & 1) sub.push_back(in[b]);
    if (span_paths(minimal_generators(ex, sub)) == span_paths(m)) best = std::min(best, sub.size());
  }
  CHECK(best == m.generators().size());
  CHECK_THROWS(Ideal(ex, {ex->parse("beta"), ex->parse("delta.beta")}));
}

TEST_CASE("sums, products, idempotents, complementarity") {
  auto a2 = fixtures::linear_algebra(2);
  auto a3 = fixtures::linear_algebra(3);
  auto ex = fixtures::example_algebra();
  Ideal e1 = ideal(a2, {"e:1"}), e2 = ideal(a2, {"e:2"}), al = ideal(a2, {"a1"});
  CHECK(ideal_sum(e1, Ideal::zero(a2)) == e1);
  CHECK(ideal_sum(ideal(a3, {"a1"}), ideal(a3, {"a2"})) == ideal(a3, {"a1", "a2"}));
  CHECK(ideal_sum(e1, al) == e1);
  CHECK(ideal_product(e2, e1) == al);
  CHECK(ideal_product(e1, e2).is_zero());
  CHECK(is_idempotent(e1));
  CHECK_FALSE(is_idempotent(al));
  CHECK(is_idempotent(Ideal::unit(a2)));
  CHECK(is_complementary(ideal(ex, {"beta"})).complementary);
  CHECK_FALSE(is_complementary(ideal(ex, {"delta.beta"})).complementary);
  CHECK(is_complementary(Ideal::zero(ex)).complementary);
  CHECK(is_complementary(Ideal::zero(ex)).level_one);
  CHECK(K_of(al) == e2);
  CHECK(K_of(ideal(ex, {"beta"})) == ideal(ex, {"e:3"}));
  CHECK(K_of(e1) == e1);
  CHECK_THROWS(K_of(Ideal::zero(a2)));
  // J_i J_i' = J_max in A_n
  auto a4 = fixtures::linear_algebra(4);
  auto J = [&](int i) {
    std::vector<std::string> g;
    for (int v = i; v <= 4; ++v) g.push_back("e:" + std::to_string(v));
    return ideal(a4, g);
  };
  for (int i = 1; i <= 4; ++i)
    for (int k = 1; k <= 4; ++k) CHECK(ideal_product(J(i), J(k)) == J(std::max(i, k)));
}

TEST_CASE("ideal enumeration and stabilizers") {
  auto a1 = fixtures::linear_algebra(1);
  auto a2 = fixtures::linear_algebra(2);
  auto ex = fixtures::example_algebra();
  CHECK(enumerate_ideals(a1).size() == 2);
  auto fam2 = enumerate_ideals(a2);
  CHECK(fam2.size() == 5);
  CHECK(enumerate_ideals(ex).size() == ideal_count_oracle(ex));
  for (const auto& q : tree_quiver_corpus(4)) {
    auto a = make_algebra(q);
    CHECK(enumerate_ideals(a).size() == ideal_count_oracle(a));
  }
  Ideal e1 = ideal(a2, {"e:1"}), e2 = ideal(a2, {"e:2"}), al = ideal(a2, {"a1"});
  CHECK(stabilizer(al, fam2) == stabilizer(e2, fam2));
  CHECK(stabilizer(Ideal::unit(a2), fam2) == std::vector<Ideal>{Ideal::unit(a2)});
  auto st = stabilizer(e1, fam2);
  std::sort(st.begin(), st.end());
  std::vector<Ideal> expect{e1, Ideal::unit(a2)};
  std::sort(expect.begin(), expect.end());
  CHECK(st == expect);
}

TEST_CASE("ideal calculus properties over the tree corpus") {
  for (const auto& q : tree_quiver_corpus(5)) {
    auto a = make_algebra(q);
    auto fam = enumerate_ideals(a);
    std::set<Ideal> members(fam.begin(), fam.end());
    CHECK(members.count(Ideal::zero(a)));
    CHECK(members.count(Ideal::unit(a)));
    for (const auto& i : fam) {
      CHECK(minimal_generators(a, span_paths(i)) == i);
      if (i.is_zero()) continue;
      Ideal k = K_of(i);
      CHECK(is_idempotent(k));
      CHECK(ideal_product(k, i) == i);
      CHECK(stabilizer(i, fam) == stabilizer(k, fam));
      if (is_idempotent(i)) {
        for (int g : i.generators()) CHECK(a->length(g) == 0);
        std::vector<Ideal> over;
        for (const auto& j : fam)
          if (i.subset_of(j)) over.push_back(j);
        CHECK(stabilizer(i, fam) == over);
      }
    }
    if (fam.size() > 40) continue;
    for (const auto& i : fam)
      for (const auto& j : fam) {
        Ideal ij = ideal_product(i, j);
        CHECK(members.count(ij));
        CHECK(members.count(ideal_sum(i, j)));
        CHECK(span_paths(ij) == product_oracle(i, j));
        for (const auto& k : {fam[fam.size() / 2], fam.back()}) {
          CHECK(ideal_product(ideal_product(i, j), k) == ideal_product(i, ideal_product(j, k)));
          CHECK(ideal_product(i, ideal_sum(j, k)) == ideal_sum(ij, ideal_product(i, k)));
          CHECK(ideal_product(ideal_sum(j, k), i) == ideal_sum(ideal_product(j, i), ideal_product(k, i)));
        }
      }
  }
}

TEST_CASE("complementary ideals are closed under sums (trees up to 6 vertices)") {
  for (const auto& q : tree_quiver_corpus(6)) {
    auto a = make_algebra(q);
    std::vector<Ideal> comp;
    for (const auto& i : enumerate_ideals(a))
      if (is_complementary(i).complementary) comp.push_back(i);
    for (const auto& i : comp)
      for (const auto& j : comp) CHECK(is_complementary(ideal_sum(i, j)).complementary);
  }
}
