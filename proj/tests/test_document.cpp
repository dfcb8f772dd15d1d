#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/document.hpp"
#include "twocat/trunc.hpp"
#include "twocat/verify.hpp"

using namespace twocat;

namespace {

const char* kExample = R"({
  "vertices": ["1", "2", "3", "4", "5"],
  "arrows": [
    {"id": "alpha", "source": "1", "target": "2"},
    {"id": "beta", "source": "2", "target": "3"},
    {"id": "gamma", "source": "2", "target": "4"},
    {"id": "delta", "source": "3", "target": "5"}
  ],
  "tree": true,
  "ideals": {"low": ["e:3", "e:5"], "cut": ["delta.beta", "beta"]}
})";

std::string error_location(const std::string& text) {
  try {
    parse_quiver_document(text, "doc");
  } catch (const DocumentError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_CASE("quiver documents") {
  auto doc = parse_quiver_document(kExample);
  CHECK(doc.quiver.vertex_count() == 5);
  CHECK(doc.quiver.is_tree());
  REQUIRE(doc.algebra);
  REQUIRE(doc.ideals.size() == 2);
  CHECK(doc.ideals[0].ideal == fixtures::ideal(doc.algebra, {"e:3", "e:5"}));
  CHECK(doc.ideals[1].ideal.descriptors() == std::vector<std::string>{"beta"});
  REQUIRE(doc.warnings.size() == 1);
  CHECK(doc.warnings[0].find("'cut'") != std::string::npos);

  // Writing and reading back gives the same quiver and canonical ideals.
  auto again = parse_quiver_document(quiver_document_json(doc));
  CHECK(again.quiver.vertices() == doc.quiver.vertices());
  CHECK(again.quiver.arrow_count() == doc.quiver.arrow_count());
  for (int a = 0; a < doc.quiver.arrow_count(); ++a) {
    CHECK(again.quiver.arrow(a).id == doc.quiver.arrow(a).id);
    CHECK(again.quiver.arrow(a).source == doc.quiver.arrow(a).source);
    CHECK(again.quiver.arrow(a).target == doc.quiver.arrow(a).target);
  }
  CHECK(again.warnings.empty());
  for (std::size_t i = 0; i < doc.ideals.size(); ++i)
    CHECK(again.ideals[i].ideal.descriptors() == doc.ideals[i].ideal.descriptors());

  auto loop_free = parse_quiver_document(R"({"vertices": [1, 2, 3], "arrows": [{"id": "a", "source": 1, "target": 2},
    {"id": "b", "source": 2, "target": 3}, {"id": "c", "source": 1, "target": 3}], "tree": false})");
  CHECK_FALSE(loop_free.algebra);
  CHECK(enumerate_paths(loop_free.quiver).size() == 7);

  CHECK(error_location("{\"vertices\": [\"1\"],\n \"arrows\": [,]}") == "2:13");
  CHECK(error_location(R"({"vertices": ["1"], "arrows": []})") == "/");
  CHECK(error_location(R"({"vertices": ["1"], "arrows": [], "tree": 1})") == "/tree");
  CHECK(error_location(R"({"vertices": ["1"], "arrows": [{"id": "a", "source": "1"}], "tree": true})") == "/arrows/0");
  CHECK(error_location(R"({"vertices": ["1", "2"], "arrows": [{"id": "a", "source": "1", "target": "3"}], "tree": true})") ==
        "/arrows/0/target");
  CHECK(error_location(R"({"vertices": ["1"], "arrows": [], "tree": true, "colour": 1})") == "/colour");
  CHECK(error_location(R"({"vertices": ["1"], "arrows": [], "tree": true, "ideals": {"x": ["e:2"]}})") ==
        "/ideals/x/0");
  CHECK(error_location(R"({"vertices": ["1", "2"], "arrows": [{"id": "a", "source": "1", "target": "2"},
    {"id": "b", "source": "2", "target": "1"}], "tree": false})") == "/arrows");
}

TEST_CASE("ideal and vector round trips") {
  for (const auto& q : tree_quiver_corpus(4)) {
    auto a = make_algebra(q);
    for (const auto& i : enumerate_ideals(a)) CHECK(parse_ideal(a, i.descriptors()) == i);
  }
  for (int d = 2; d <= 6; ++d) {
    TruncParams t(4, d);
    for (const auto& v : center_corpus(t, 20, 5u + d)) CHECK(parse_cyclo_vector(format_cyclo_vector(v), d) == v);
  }
  CHECK_THROWS_WITH_AS(parse_cyclo_vector("1,,2", 3), doctest::Contains("entry 2 at column 3"), std::invalid_argument);
}

TEST_CASE("verification suites are registered in criterion order") {
  const auto& names = suite_names();
  CHECK(names.size() == 14);
  CHECK(names.front() == "an-oracle");
  CHECK_THROWS_AS(run_suite("missing"), std::invalid_argument);
  SuiteOptions small;
  small.n = 3;
  auto s = run_suite("an-oracle", small);
  CHECK(s.criterion == 1);
  CHECK(s.checks.size() == 36);
  CHECK(s.ok());
  auto again = run_suite("an-oracle", small);
  for (std::size_t i = 0; i < s.checks.size(); ++i) CHECK(again.checks[i].id == s.checks[i].id);
}
