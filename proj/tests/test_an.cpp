#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/an.hpp"

using namespace twocat;

TEST_CASE("interval bimodules") {
  auto m = build_M(3, 1, 3);
  CHECK(m.dim() == 6);
  CHECK(validate(m).empty());
  CHECK(is_isomorphic(m, identity_bimodule(fixtures::linear_algebra(3))));
  auto r = build_M(3, 2, 2);
  auto labels = r.labels;
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"a1", "e:2"});
  CHECK_THROWS_AS(build_M(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_M(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_M(3, 1, 4), std::invalid_argument);

  AnContext ctx(4);
  for (auto f : ctx.intervals()) {
    int expect = 0;
    for (int t = f.i; t <= f.j; ++t) expect += t;
    CHECK(ctx.M(f).dim() == static_cast<std::size_t>(expect));
    CHECK(ctx.match(ctx.M(f)) == f);
    if (f.j == 4) CHECK(is_isomorphic(ctx.M(f), ideal_bimodule(ctx.J(f.i))));
  }
  CHECK(parse_interval("(2,3)") == Interval{2, 3});
  CHECK(parse_interval("1,4") == Interval{1, 4});
  CHECK_THROWS_AS(parse_interval("1;4"), std::invalid_argument);
}

TEST_CASE("composition: closed form against the tensor oracle") {
  CHECK(compose_closed(3, {1, 2}, {2, 3}) == Interval{2, 2});
  CHECK_FALSE(compose_closed(3, {1, 1}, {2, 3}).has_value());
  for (int n = 1; n <= 4; ++n) {
    AnContext ctx(n);
    for (auto a : ctx.intervals()) {
      CHECK(compose_closed(n, a, a) == a);
      for (auto b : ctx.intervals()) {
        auto closed = compose_closed(n, a, b);
        CHECK(closed == compose_closed(n, b, a));
        auto oracle = compose_oracle(ctx, a, b);
        if (closed) {
          REQUIRE(oracle.size() == 1);
          CHECK(oracle[0].first == *closed);
          CHECK(oracle[0].second == 1);
        } else {
          CHECK(oracle.empty());
        }
      }
    }
  }
  // M_{1,a-1} (x) M_{b+1,n} = 0
  AnContext ctx(5);
  CHECK(compose_oracle(ctx, {1, 2}, {4, 5}).empty());
}

TEST_CASE("Hom dimensions and the canonical maps") {
  CHECK(hom_dim_closed(3, {2, 3}, {1, 2}) == 1);
  CHECK(hom_dim_closed(3, {1, 2}, {2, 3}) == 0);
  for (int n = 1; n <= 4; ++n) {
    AnContext ctx(n);
    for (auto a : ctx.intervals())
      for (auto b : ctx.intervals()) {
        auto basis = hom_basis(ctx.M(a), ctx.M(b));
        CHECK(static_cast<int>(basis.size()) == hom_dim_closed(n, a, b));
        auto s = sigma(ctx, a, b);
        CHECK(s.has_value() == (basis.size() == 1));
        if (s) {
          CHECK(is_bimodule_map(ctx.M(a), ctx.M(b), *s));
          CHECK_FALSE(s->is_zero());
        }
        if (a == b) CHECK(*s == Matrix<Rational>::identity(ctx.M(a).dim()));
      }
  }
}

TEST_CASE("twisted identities split along the interval cut") {
  for (int n = 1; n <= 4; ++n) {
    AnContext ctx(n);
    for (const auto& i : level_one_ideals(ctx.algebra())) {
      auto cut = interval_cut(n, i);
      std::vector<Interval> found;
      for (const auto& s : decompose(twisted_identity(i))) {
        auto f = ctx.match(s.module);
        REQUIRE(f.has_value());
        CHECK(is_isomorphic_indecomposable(s.module, ctx.M(*f)));
        for (int c = 0; c < s.multiplicity; ++c) found.push_back(*f);
      }
      std::sort(found.begin(), found.end());
      CHECK(found == cut);
    }
  }
}

TEST_CASE("principal quiver") {
  auto q1 = principal_quiver(AnContext(1));
  CHECK(q1.vertices.size() == 1);
  CHECK(q1.arrows.empty());
  auto q2 = principal_quiver(AnContext(2));
  CHECK(q2.vertices.size() == 3);
  CHECK(q2.arrows.size() == 2);
  auto zero = std::count_if(q2.relations.begin(), q2.relations.end(), [](const auto& r) { return r.kind == "zero"; });
  CHECK(zero == 1);
  CHECK(q2.ok());
  for (int n = 3; n <= 5; ++n) {
    auto q = principal_quiver(AnContext(n));
    CHECK(q.vertices.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(q.arrows.size() == static_cast<std::size_t>(n * (n - 1)));
    auto squares = std::count_if(q.relations.begin(), q.relations.end(), [](const auto& r) { return r.kind == "square"; });
    CHECK(squares == (n - 1) * (n - 2) / 2);
    CHECK(q.ok());
  }
  auto dot = principal_quiver(AnContext(3)).dot();
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"M1,1\" -> \"M1,2\"") != std::string::npos);
  CHECK(dot.find("label=\"0\"") != std::string::npos);
}

TEST_CASE("cells and simple transitive data") {
  CHECK(cells_An(AnContext(2)).two_cells.size() == 3);
  for (int n = 1; n <= 4; ++n) {
    AnContext ctx(n);
    CHECK(cells_An(ctx).all_singletons());
    std::vector<std::vector<Interval>> seen;
    for (auto f : ctx.intervals()) {
      auto st = st_set_closed(n, f);
      CHECK(st == st_set_oracle(ctx, f));
      CHECK(std::find(st.begin(), st.end(), Interval{1, n}) != st.end());
      CHECK(std::find(seen.begin(), seen.end(), st) == seen.end());
      seen.push_back(st);
    }
  }
}

TEST_CASE("braidings") {
  AnContext ctx(3);
  for (auto f : ctx.intervals()) {
    auto b = braiding(ctx, f);
    for (std::size_t t = 0; t < b.ks.size(); ++t) {
      CHECK(is_invertible(b.maps[t]));
      if (b.ks[t] == f) CHECK(b.maps[t] == Matrix<Rational>::identity(b.maps[t].rows()));
    }
  }
  AnContext c2(2);
  auto b = braiding(c2, {2, 2});
  CHECK(hexagon_holds(c2, {2, 2}, b.maps, {2, 2}, {1, 2}));
  auto bad = b.maps;
  bad.back() = bad.back().scaled(Rational(2));
  bool any_fail = false;
  for (auto k : c2.intervals())
    for (auto h : c2.intervals()) any_fail = any_fail || !hexagon_holds(c2, {2, 2}, bad, k, h);
  CHECK(any_fail);
}

TEST_CASE("Drinfeld center of A_n") {
  for (int n = 1; n <= 4; ++n) {
    AnContext ctx(n);
    auto rep = center_An(ctx);
    CHECK(rep.ok());
    for (const auto& o : rep.objects) {
      CHECK(o.solution_dim == 1);
      CHECK(o.normalised_is_braiding);
      CHECK(o.natural_everywhere);
      CHECK(o.hexagon);
      CHECK(o.end_dim == 1);
    }
    for (const auto& h : rep.homs) CHECK(h.hom_dim == h.center_dim);
    for (const auto& s : rep.splittings) {
      CHECK(s.direct_sum_splits);
      CHECK_FALSE(s.perturbed_splits);
    }
  }
}
