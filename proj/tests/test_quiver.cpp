#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/quiver.hpp"

using namespace twocat;

TEST_CASE("path enumeration") {
  CHECK(enumerate_paths(Quiver::linear(1)).size() == 1);
  CHECK(enumerate_paths(Quiver::linear(2)).size() == 3);
  CHECK(enumerate_paths(Quiver::linear(3)).size() == 6);
  CHECK(enumerate_paths(fixtures::example_quiver()).size() == 13);
  CHECK_THROWS(enumerate_paths(Quiver::loop()));
  CHECK(enumerate_paths(Quiver::loop(), 4).size() == 4);

  auto ps = enumerate_paths(fixtures::example_quiver());
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(path_less(ps[i], ps[i + 1]));
}

TEST_CASE("quiver validation") {
  CHECK_THROWS(Quiver({"1", "2"}, {{"a", 0, 2}}, false));
  CHECK_THROWS(Quiver({"1", "2", "3"}, {{"a", 0, 1}}, true));
  CHECK_THROWS(Quiver({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, true));
  CHECK_THROWS(Quiver({"1", "1"}, {}, false));
  CHECK_NOTHROW(Quiver({"1"}, {}, true));
}

TEST_CASE("subpath order and composition") {
  Quiver q = fixtures::example_quiver();
  auto p = [&](const char* s) { return parse_path(q, s); };
  Quiver a2 = Quiver::linear(2);
  CHECK(subpath_leq(a2, parse_path(a2, "e:1"), parse_path(a2, "a1")));
  CHECK(subpath_leq(q, p("alpha"), p("delta.beta.alpha")));
  CHECK_FALSE(subpath_leq(q, p("beta"), p("gamma.alpha")));
  CHECK(*compose(p("delta.beta"), p("alpha")) == p("delta.beta.alpha"));
  CHECK(*compose(p("e:5"), p("delta")) == p("delta"));
  CHECK_FALSE(compose(p("alpha"), p("delta")).has_value());
  CHECK_THROWS(parse_path(q, "alpha.delta"));
  CHECK_THROWS(parse_path(q, "e:9"));
  for (const auto& w : enumerate_paths(q)) CHECK(parse_path(q, describe(q, w)) == w);
}

TEST_CASE("poset laws, associativity and tree uniqueness on the corpus") {
  for (const auto& q : tree_quiver_corpus(5)) {
    PathPoset pp = path_poset(q);
    std::size_t n = pp.paths.size();
    std::set<std::pair<int, int>> ends;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(pp.leq[i][i]);
      CHECK(ends.insert({pp.paths[i].source, pp.paths[i].target}).second);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && pp.leq[i][j]) CHECK_FALSE(pp.leq[j][i]);
        for (std::size_t k = 0; k < n; ++k)
          if (pp.leq[i][j] && pp.leq[j][k]) CHECK(pp.leq[i][k]);
        auto ij = compose(pp.paths[i], pp.paths[j]);
        if (!ij) continue;
        for (std::size_t k = 0; k < n; ++k) {
          auto l = compose(*ij, pp.paths[k]);
          auto jk = compose(pp.paths[j], pp.paths[k]);
          CHECK(l.has_value() == jk.has_value());
          if (l && jk) CHECK(*l == *compose(pp.paths[i], *jk));
        }
      }
      // trivial paths are minimal among paths through their vertex
      if (pp.paths[i].is_trivial())
        for (std::size_t j = 0; j < n; ++j)
          if (pp.leq[j][i]) CHECK(j == i);
    }
  }
}

TEST_CASE("oriented tree corpus") {
  // oriented trees up to isomorphism: 1, 1, 3, 8, 27, 91
  std::vector<std::size_t> expect{1, 1, 3, 8, 27, 91};
  std::vector<std::size_t> count(7, 0);
  for (const auto& q : tree_quiver_corpus(6)) ++count[q.vertex_count()];
  for (int m = 1; m <= 6; ++m) CHECK(count[m] == expect[m - 1]);
}
