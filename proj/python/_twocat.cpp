#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twocat/an.hpp"
#include "twocat/da.hpp"
#include "twocat/document.hpp"
#include "twocat/trunc.hpp"
#include "twocat/verify.hpp"

namespace py = pybind11;
using namespace twocat;

namespace {

using IntervalTuple = std::pair<int, int>;
using Descriptors = std::vector<std::string>;

Interval as_interval(IntervalTuple t) { return Interval{t.first, t.second}; }
IntervalTuple as_tuple(Interval f) { return {f.i, f.j}; }

Quiver make_quiver(const std::vector<std::string>& vertices,
                   const std::vector<std::tuple<std::string, std::string, std::string>>& arrows, bool tree) {
  std::vector<Arrow> as;
  for (const auto& [id, s, t] : arrows) {
    auto find = [&](const std::string& v) {
      auto it = std::find(vertices.begin(), vertices.end(), v);
      if (it == vertices.end()) throw std::invalid_argument("undeclared vertex '" + v + "'");
      return static_cast<int>(it - vertices.begin());
    };
    as.push_back({id, find(s), find(t)});
  }
  return Quiver(vertices, as, tree);
}

std::vector<Cyclo> as_vector(const std::vector<std::string>& entries, int d) {
  std::vector<Cyclo> out;
  for (const auto& e : entries) out.push_back(Cyclo::parse(e, d));
  return out;
}

std::vector<std::string> as_strings(const std::vector<Cyclo>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

std::vector<Descriptors> ideal_list(const std::vector<Ideal>& ideals) {
  std::vector<Descriptors> out;
  for (const auto& i : ideals) out.push_back(i.descriptors());
  return out;
}

py::dict suite_dict(const VerificationSuite& s) {
  py::list checks;
  for (const auto& c : s.checks) {
    py::dict params;
    for (const auto& [k, v] : c.params) params[py::str(k)] = v;
    py::dict d;
    d["id"] = c.id;
    d["params"] = params;
    d["source"] = to_string(c.source);
    d["pass"] = c.pass;
    d["value"] = c.value;
    d["counterexample"] = c.counterexample;
    checks.append(d);
  }
  py::dict out;
  out["name"] = s.name;
  out["criterion"] = s.criterion;
  out["title"] = s.title;
  out["ok"] = s.ok();
  out["passed"] = s.passed();
  out["checks"] = checks;
  out["seconds"] = s.seconds;
  return out;
}

}  // namespace

PYBIND11_MODULE(_twocat, m) {
  m.doc() = "Exact computations in ideal 2-categories of tree algebras and truncated polynomial 2-categories";

  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);

  py::class_<Quiver>(m, "Quiver")
      .def(py::init(&make_quiver), py::arg("vertices"), py::arg("arrows"), py::arg("tree") = true,
           "arrows are (id, source label, target label)")
      .def_static("linear", &Quiver::linear, py::arg("n"))
      .def_static(
          "from_json", [](const std::string& text) { return parse_quiver_document(text).quiver; }, py::arg("text"))
      .def_property_readonly("vertices", &Quiver::vertices)
      .def_property_readonly("arrows",
                             [](const Quiver& q) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& a : q.arrows()) out.emplace_back(a.id, q.vertex(a.source), q.vertex(a.target));
                               return out;
                             })
      .def_property_readonly("is_tree", &Quiver::is_tree)
      .def("__repr__", [](const Quiver& q) {
        return "Quiver(" + std::to_string(q.vertex_count()) + " vertices, " + std::to_string(q.arrow_count()) + " arrows)";
      });

  m.def("tree_corpus", &tree_quiver_corpus, py::arg("max_vertices"));
  m.def(
      "paths",
      [](const Quiver& q) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_paths(q)) out.push_back(describe(q, p));
        return out;
      },
      py::arg("quiver"));

  // ideals
  m.def(
      "ideals", [](const Quiver& q) { return ideal_list(enumerate_ideals(make_algebra(q))); }, py::arg("quiver"));
  m.def(
      "level_one_ideals", [](const Quiver& q) { return ideal_list(level_one_ideals(make_algebra(q))); },
      py::arg("quiver"));
  m.def(
      "minimal_generators",
      [](const Quiver& q, const Descriptors& paths) { return parse_ideal(make_algebra(q), paths).descriptors(); },
      py::arg("quiver"), py::arg("paths"));
  m.def(
      "ideal_product",
      [](const Quiver& q, const Descriptors& i, const Descriptors& j) {
        auto a = make_algebra(q);
        return ideal_product(parse_ideal(a, i), parse_ideal(a, j)).descriptors();
      },
      py::arg("quiver"), py::arg("i"), py::arg("j"));
  m.def(
      "is_idempotent", [](const Quiver& q, const Descriptors& i) { return is_idempotent(parse_ideal(make_algebra(q), i)); },
      py::arg("quiver"), py::arg("ideal"));

  // ideal 2-category
  m.def(
      "indecomposables", [](const Quiver& q) { return ideal_list(indecomposable_one_morphisms(make_algebra(q))); },
      py::arg("quiver"));
  m.def(
      "classify_simple_transitive",
      [](const Quiver& q) {
        py::list out;
        for (const auto& c : classify_simple_transitive_DA(make_algebra(q))) {
          py::dict d;
          d["ideal"] = c.ideal.descriptors();
          d["character"] = c.character;
          d["stabilizer"] = ideal_list(c.stabilizer);
          out.append(d);
        }
        return out;
      },
      py::arg("quiver"));
  m.def(
      "center_is_trivial", [](const Quiver& q) { return center_DA(make_algebra(q)).ok(); }, py::arg("quiver"));
  m.def(
      "twisted_tensor_agrees",
      [](const Quiver& q, const Descriptors& i, const Descriptors& j) {
        auto a = make_algebra(q);
        auto x = parse_ideal(a, i), y = parse_ideal(a, j);
        return is_isomorphic(tensor(twisted_identity(x), twisted_identity(y)), twisted_identity(ideal_sum(x, y)));
      },
      py::arg("quiver"), py::arg("i"), py::arg("j"));

  // A_n
  m.def(
      "compose_closed",
      [](int n, IntervalTuple a, IntervalTuple b) -> std::optional<IntervalTuple> {
        auto r = compose_closed(n, as_interval(a), as_interval(b));
        if (!r) return std::nullopt;
        return as_tuple(*r);
      },
      py::arg("n"), py::arg("left"), py::arg("right"));
  m.def(
      "compose_oracle",
      [](int n, IntervalTuple a, IntervalTuple b) {
        std::vector<std::pair<IntervalTuple, int>> out;
        for (const auto& [f, mult] : compose_oracle(AnContext(n), as_interval(a), as_interval(b)))
          out.emplace_back(as_tuple(f), mult);
        return out;
      },
      py::arg("n"), py::arg("left"), py::arg("right"));
  m.def(
      "hom_dim",
      [](int n, IntervalTuple a, IntervalTuple b) {
        AnContext ctx(n);
        return hom_basis(ctx.M(as_interval(a)), ctx.M(as_interval(b))).size();
      },
      py::arg("n"), py::arg("source"), py::arg("target"));
  m.def(
      "hom_dim_closed", [](int n, IntervalTuple a, IntervalTuple b) { return hom_dim_closed(n, as_interval(a), as_interval(b)); },
      py::arg("n"), py::arg("source"), py::arg("target"));
  m.def(
      "interval_cut",
      [](int n, const Descriptors& arrows) {
        std::vector<IntervalTuple> out;
        for (auto f : interval_cut(n, parse_ideal(make_algebra(Quiver::linear(n)), arrows))) out.push_back(as_tuple(f));
        return out;
      },
      py::arg("n"), py::arg("arrows"));
  m.def(
      "principal_quiver",
      [](int n) {
        auto q = principal_quiver(AnContext(n));
        py::dict d;
        d["vertices"] = q.vertices.size();
        d["arrows"] = q.arrows.size();
        std::map<std::string, int> kinds;
        for (const auto& r : q.relations) ++kinds[r.kind];
        d["relations"] = kinds;
        d["ok"] = q.ok();
        d["dot"] = q.dot();
        return d;
      },
      py::arg("n"));
  m.def(
      "center_An_ok", [](int n) { return center_An(AnContext(n)).ok(); }, py::arg("n"));

  // truncated polynomials
  m.def(
      "center_condition",
      [](int k, int d, const std::vector<std::string>& a) { return center_condition(TruncParams(k, d), as_vector(a, d)); },
      py::arg("k"), py::arg("d"), py::arg("a"), "a lists scalars as strings in z, e.g. ['1', '2*z - 1']");
  m.def(
      "is_diagonalizable",
      [](int k, int d, const std::vector<std::string>& a) {
        return center_condition_diagonalizable(TruncParams(k, d), as_vector(a, d));
      },
      py::arg("k"), py::arg("d"), py::arg("a"));
  m.def(
      "center_hom",
      [](int k, int d, const std::vector<std::string>& aphi, const std::vector<std::string>& apsi) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : center_hom(TruncParams(k, d), as_vector(aphi, d), as_vector(apsi, d)))
          out.push_back(as_strings(v));
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("aphi"), py::arg("apsi"));
  m.def(
      "center_free_d2",
      [](int k) {
        auto r = enumerate_center_d2(k);
        py::dict d;
        d["free"] = r.free;
        std::map<int, std::string> det;
        for (const auto& [j, p] : r.determined) det[j] = p.str();
        d["determined"] = det;
        d["identity_after_substitution"] = r.identity_after_substitution;
        return d;
      },
      py::arg("k"));
  m.def(
      "trunc_hom",
      [](int k, int d, int i, int j) {
        std::vector<std::string> out;
        for (const auto& f : hom_trunc(TruncParams(k, d), i, j).basis) out.push_back(f.str());
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("i"), py::arg("j"));
  m.def(
      "horizontal_oracle",
      [](int k, int d) {
        auto r = horizontal_oracle(TruncParams(k, d));
        return std::make_pair(r.checks, r.mismatches);
      },
      py::arg("k"), py::arg("d"));
  m.def(
      "quiver_QD",
      [](int k, int d) {
        auto q = quiver_QD(TruncParams(k, d));
        py::dict out;
        out["loops"] = q.loops.size();
        out["arrows"] = q.arrows.size();
        out["length_two_paths"] = q.length_two_paths;
        out["zero_length_two_paths"] = q.zero_length_two_paths;
        out["ok"] = q.ok();
        return out;
      },
      py::arg("k"), py::arg("d"));
  m.def(
      "center_corpus",
      [](int k, int d, std::size_t count, std::uint32_t seed) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : center_corpus(TruncParams(k, d), count, seed)) out.push_back(as_strings(v));
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("count"), py::arg("seed"));

  // verification
  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::optional<int> n, int kmax, int tree_max, int corpus) {
        SuiteOptions o;
        o.n = n;
        o.kmax = kmax;
        o.tree_max = tree_max;
        o.corpus = corpus;
        VerificationSuite s;
        {
          py::gil_scoped_release release;
          s = run_suite(name, o);
        }
        return suite_dict(s);
      },
      py::arg("name"), py::arg("n") = py::none(), py::arg("kmax") = 8, py::arg("tree_max") = 5, py::arg("corpus") = 50);
}
