// twocat: command-line front end for the ideal 2-categories of tree algebras
// and the truncated polynomial 2-category.
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twocat/an.hpp"
#include "twocat/da.hpp"
#include "twocat/document.hpp"
#include "twocat/trunc.hpp"
#include "twocat/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace twocat;

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

// Raised for bad flag values; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json = false;
  std::ostringstream text;
  ::json doc = ::json::object();

  int emit(int code) {
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text.str();
    return code;
  }
};

// Quiver input shared by the tree commands: a document file or A_n.
struct QuiverSource {
  std::string file;
  int linear = 0;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--quiver,-q", file, "quiver document (JSON)")->check(CLI::ExistingFile);
    auto* l = cmd->add_option("--linear", linear, "use the linear quiver A_n instead")->check(CLI::PositiveNumber);
    f->excludes(l);
  }

  QuiverDocument load(bool need_tree) const {
    QuiverDocument doc;
    if (!file.empty()) {
      doc = load_quiver_document(file);
    } else if (linear > 0) {
      doc.quiver = Quiver::linear(linear);
      doc.algebra = make_algebra(doc.quiver);
    } else {
      throw UsageError("one of --quiver or --linear is required");
    }
    for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
    if (need_tree && !doc.algebra) throw UsageError("this command needs a tree quiver");
    return doc;
  }
};

json ideal_json(const Ideal& i) { return i.descriptors(); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

Interval interval_flag(const std::string& text, int n, const char* flag) {
  Interval f;
  try {
    f = parse_interval(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (f.i < 1 || f.i > f.j || f.j > n) throw UsageError(std::string(flag) + ": " + f.str() + " is not an interval of A_" + std::to_string(n));
  return f;
}

std::vector<Cyclo> vector_flag(const std::string& text, int d, const char* flag) {
  try {
    return parse_cyclo_vector(text, d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

json cyclo_vector_json(const std::vector<Cyclo>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

// paths ---------------------------------------------------------------------

int cmd_paths(const QuiverSource& src, Output& out) {
  auto doc = src.load(false);
  const Quiver& q = doc.quiver;
  out.doc["paths"] = json::array();
  for (const auto& p : enumerate_paths(q)) {
    std::string d = describe(q, p);
    out.doc["paths"].push_back(
        {{"path", d}, {"source", q.vertex(p.source)}, {"target", q.vertex(p.target)}, {"length", p.length()}});
    out.text << d << "\t" << q.vertex(p.source) << " -> " << q.vertex(p.target) << "\tlength " << p.length() << "\n";
  }
  return kOk;
}

// ideals --------------------------------------------------------------------

int cmd_ideals(const QuiverSource& src, bool level_one, Output& out) {
  auto doc = src.load(true);
  auto ideals = level_one ? level_one_ideals(doc.algebra) : enumerate_ideals(doc.algebra);
  out.doc["ideals"] = json::array();
  for (const auto& i : ideals) {
    auto c = is_complementary(i);
    bool idem = is_idempotent(i);
    out.doc["ideals"].push_back({{"generators", ideal_json(i)},
                                 {"idempotent", idem},
                                 {"complementary", c.complementary},
                                 {"level_one", c.level_one}});
    out.text << i.str() << (idem ? "  idempotent" : "") << (c.complementary ? "  complementary" : "")
             << (c.level_one ? "  level-one" : "") << "\n";
  }
  if (!doc.ideals.empty()) {
    out.doc["named"] = json::object();
    out.text << "named:\n";
    for (const auto& n : doc.ideals) {
      out.doc["named"][n.name] = ideal_json(n.ideal);
      out.text << "  " << n.name << " = " << n.ideal.str() << "\n";
    }
  }
  return kOk;
}

// da ------------------------------------------------------------------------

json cells_json(const std::vector<std::vector<int>>& cells, const std::vector<Ideal>& ideals) {
  json out = json::array();
  for (const auto& c : cells) {
    json cell = json::array();
    for (int i : c) cell.push_back(ideal_json(ideals[i]));
    out.push_back(cell);
  }
  return out;
}

void cells_text(std::ostream& os, const char* name, const std::vector<std::vector<int>>& cells,
                const std::vector<std::string>& names) {
  os << name << " cells:\n";
  for (const auto& c : cells) {
    std::vector<std::string> members;
    for (int i : c) members.push_back(names[i]);
    os << "  {" << join(members, ", ") << "}\n";
  }
}

int cmd_da_cells(const QuiverSource& src, Output& out) {
  auto doc = src.load(true);
  auto cs = cells_DA(doc.algebra);
  // Cell indices refer to the indecomposables in enumeration order.
  auto ideals = indecomposable_one_morphisms(doc.algebra);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i].str() != cs.names[i]) throw std::logic_error("cell names out of order");
  out.doc["indecomposables"] = json::array();
  for (const auto& i : ideals) out.doc["indecomposables"].push_back(ideal_json(i));
  out.doc["left"] = cells_json(cs.left_cells, ideals);
  out.doc["right"] = cells_json(cs.right_cells, ideals);
  out.doc["two_sided"] = cells_json(cs.two_cells, ideals);
  cells_text(out.text, "left", cs.left_cells, cs.names);
  cells_text(out.text, "right", cs.right_cells, cs.names);
  cells_text(out.text, "two-sided", cs.two_cells, cs.names);
  return kOk;
}

int cmd_da_classify(const QuiverSource& src, Output& out) {
  auto doc = src.load(true);
  auto classes = classify_simple_transitive_DA(doc.algebra);
  out.doc["classes"] = json::array();
  if (!classes.empty()) {
    out.doc["morphisms"] = json::array();
    std::vector<std::string> names;
    for (const auto& m : classes.front().morphisms) {
      out.doc["morphisms"].push_back(ideal_json(m));
      names.push_back(m.str());
    }
    out.text << "characters over: " << join(names, " ") << "\n";
  }
  for (const auto& c : classes) {
    json stab = json::array();
    std::vector<std::string> stab_names;
    for (const auto& s : c.stabilizer) {
      stab.push_back(ideal_json(s));
      stab_names.push_back(s.str());
    }
    out.doc["classes"].push_back({{"ideal", ideal_json(c.ideal)}, {"character", c.character}, {"stabilizer", stab}});
    std::string row;
    for (int x : c.character) row += std::to_string(x);
    out.text << c.ideal.str() << "  character " << row << "  stabilizer {" << join(stab_names, ", ") << "}\n";
  }
  out.text << classes.size() << " simple transitive classes\n";
  return kOk;
}

int cmd_da_center(const QuiverSource& src, Output& out) {
  auto doc = src.load(true);
  auto r = center_DA(doc.algebra);
  out.doc["witnesses"] = json::array();
  for (const auto& w : r.witnesses) {
    out.doc["witnesses"].push_back({{"ideal", ideal_json(w.ideal)},
                                    {"witness", ideal_json(w.witness)},
                                    {"ij", ideal_json(w.ij)},
                                    {"ji", ideal_json(w.ji)},
                                    {"bimodules_differ", w.bimodules_differ}});
    out.text << w.ideal.str() << " vs " << w.witness.str() << ": " << w.ij.str() << " / " << w.ji.str()
             << (w.bimodules_differ ? "" : "  (tensor products isomorphic)") << "\n";
  }
  out.doc["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) {
    out.doc["counterexamples"].push_back(ideal_json(c));
    out.text << "no witness: " << c.str() << "\n";
  }
  out.doc["unit_scalars"] = json::array();
  bool forced = true;
  for (const auto& u : r.unit_scalars) {
    out.doc["unit_scalars"].push_back({{"ideal", ideal_json(u.ideal)},
                                       {"hom_dim", u.hom_dim},
                                       {"scalar", u.k ? json(u.k->get_str()) : json(nullptr)},
                                       {"unique", u.unique},
                                       {"matches_unit", u.matches_unit}});
    forced = forced && u.k && *u.k == 1 && u.unique && u.matches_unit;
  }
  out.doc["unit_end_dim"] = r.unit_end_dim;
  out.doc["ok"] = r.ok();
  out.text << "unit: scalars " << (forced ? "forced to 1" : "NOT forced") << " on " << r.unit_scalars.size()
           << " components, End dimension " << r.unit_end_dim << "\n"
           << (r.ok() ? "center is trivial" : "center check FAILED") << "\n";
  return r.ok() ? kOk : kFailed;
}

// an ------------------------------------------------------------------------

int cmd_an_compose(int n, const std::string& left, const std::string& right, bool dump, Output& out) {
  AnContext ctx(n);
  Interval a = interval_flag(left, n, "--left"), b = interval_flag(right, n, "--right");
  auto closed = compose_closed(n, a, b);
  auto oracle = compose_oracle(ctx, a, b);
  bool agree = closed ? oracle == std::vector<std::pair<Interval, int>>{{*closed, 1}} : oracle.empty();
  std::string result = closed ? closed->str() : "0";
  out.doc["left"] = a.str();
  out.doc["right"] = b.str();
  out.doc["result"] = closed ? json(closed->str()) : json(nullptr);
  json summands = json::array();
  for (const auto& [f, m] : oracle) summands.push_back({{"interval", f.str()}, {"multiplicity", m}});
  out.doc["oracle"] = summands;
  out.doc["agree"] = agree;
  out.text << result << "\n";
  if (dump) {
    auto tp = tensor(ctx.M(a), ctx.M(b));
    out.doc["tensor"] = json::parse(bimodule_json(tp));
    out.text << bimodule_json(tp) << "\n";
  }
  if (!agree) std::cerr << "closed form and tensor oracle disagree on " << a.str() << " o " << b.str() << "\n";
  return agree ? kOk : kFailed;
}

int cmd_an_quiver(int n, bool dot, Output& out) {
  auto q = principal_quiver(AnContext(n));
  out.doc["n"] = n;
  out.doc["vertices"] = json::array();
  for (auto v : q.vertices) out.doc["vertices"].push_back(v.str());
  out.doc["arrows"] = json::array();
  for (const auto& a : q.arrows) out.doc["arrows"].push_back({{"from", a.from.str()}, {"to", a.to.str()}});
  out.doc["relations"] = json::array();
  for (const auto& r : q.relations) {
    json vs = json::array();
    for (auto v : r.vertices) vs.push_back(v.str());
    out.doc["relations"].push_back({{"kind", r.kind}, {"vertices", vs}, {"holds", r.holds}});
  }
  out.doc["ok"] = q.ok();
  if (dot) {
    out.text << q.dot();
  } else {
    out.text << q.vertices.size() << " vertices, " << q.arrows.size() << " arrows\n";
    for (const auto& a : q.arrows) out.text << "  " << a.from.str() << " -> " << a.to.str() << "\n";
    for (const auto& r : q.relations) {
      std::vector<std::string> vs;
      for (auto v : r.vertices) vs.push_back(v.str());
      out.text << "  " << r.kind << " " << join(vs, " ") << (r.holds ? "  holds" : "  FAILS") << "\n";
    }
  }
  return q.ok() ? kOk : kFailed;
}

int cmd_an_cells(int n, Output& out) {
  AnContext ctx(n);
  auto cs = cells_An(ctx);
  out.doc["n"] = n;
  auto names_json = [&](const std::vector<std::vector<int>>& cells) {
    json o = json::array();
    for (const auto& c : cells) {
      json cell = json::array();
      for (int i : c) cell.push_back(cs.names[i]);
      o.push_back(cell);
    }
    return o;
  };
  out.doc["left"] = names_json(cs.left_cells);
  out.doc["right"] = names_json(cs.right_cells);
  out.doc["two_sided"] = names_json(cs.two_cells);
  cells_text(out.text, "left", cs.left_cells, cs.names);
  cells_text(out.text, "right", cs.right_cells, cs.names);
  cells_text(out.text, "two-sided", cs.two_cells, cs.names);
  bool agree = true;
  out.doc["stabilizers"] = json::array();
  out.text << "H o F = F:\n";
  for (auto f : ctx.intervals()) {
    auto closed = st_set_closed(n, f), oracle = st_set_oracle(ctx, f);
    agree = agree && closed == oracle;
    json hs = json::array();
    std::vector<std::string> names;
    for (auto h : oracle) {
      hs.push_back(h.str());
      names.push_back(h.str());
    }
    out.doc["stabilizers"].push_back({{"f", f.str()}, {"h", hs}, {"closed_form_agrees", closed == oracle}});
    out.text << "  " << f.str() << ": " << join(names, " ") << (closed == oracle ? "" : "  (closed form differs)")
             << "\n";
  }
  return agree ? kOk : kFailed;
}

int cmd_an_center(int n, Output& out) {
  AnContext ctx(n);
  auto r = center_An(ctx);
  out.doc["n"] = n;
  out.doc["objects"] = json::array();
  for (const auto& o : r.objects) {
    out.doc["objects"].push_back({{"f", o.f.str()},
                                  {"solution_dim", o.solution_dim},
                                  {"normalised_is_braiding", o.normalised_is_braiding},
                                  {"natural", o.natural_everywhere},
                                  {"hexagon", o.hexagon},
                                  {"end_dim", o.end_dim}});
    bool good = o.solution_dim == 1 && o.normalised_is_braiding && o.natural_everywhere && o.hexagon;
    out.text << o.f.str() << ": half-braiding " << (good ? "unique, hexagon holds" : "FAILED") << ", End dim "
             << o.end_dim << "\n";
  }
  out.doc["homs"] = json::array();
  for (const auto& h : r.homs)
    out.doc["homs"].push_back({{"f", h.f.str()}, {"g", h.g.str()}, {"hom_dim", h.hom_dim}, {"center_dim", h.center_dim}});
  out.doc["splittings"] = json::array();
  std::size_t split = 0;
  for (const auto& s : r.splittings) {
    out.doc["splittings"].push_back(
        {{"f", s.f.str()}, {"g", s.g.str()}, {"splits", s.direct_sum_splits}, {"perturbed_splits", s.perturbed_splits}});
    split += s.direct_sum_splits && !s.perturbed_splits;
  }
  out.text << split << "/" << r.splittings.size() << " direct sums split and their perturbations do not\n";
  out.doc["ok"] = r.ok();
  out.text << (r.ok() ? "ok" : "FAILED") << "\n";
  return r.ok() ? kOk : kFailed;
}

// trunc ---------------------------------------------------------------------

int cmd_trunc_hom(int k, int d, int i, int j, Output& out) {
  TruncParams t(k, d);
  auto h = hom_trunc(t, i, j);
  out.doc["source"] = h.source;
  out.doc["target"] = h.target;
  json basis = json::array();
  std::vector<std::string> names;
  for (const auto& m : h.basis) {
    basis.push_back(m.str());
    names.push_back(m.str());
  }
  out.doc["basis"] = basis;
  out.doc["engine_dim"] = h.engine_dim;
  out.doc["engine_agrees"] = h.engine_agrees;
  out.text << "Hom(F_" << h.source << ", F_" << h.target << ") = span{" << join(names, ", ") << "}, dimension "
           << h.basis.size() << (h.engine_agrees ? "" : "  (bimodule engine DISAGREES)") << "\n";
  return h.engine_agrees ? kOk : kFailed;
}

int cmd_trunc_quiver(int k, int d, bool dot, Output& out) {
  auto q = quiver_QD(TruncParams(k, d));
  out.doc["k"] = k;
  out.doc["d"] = d;
  auto arrows_json = [](const std::vector<QuiverArrowQD>& as) {
    json o = json::array();
    for (const auto& a : as) o.push_back({{"from", a.from}, {"to", a.to}, {"label", a.label}});
    return o;
  };
  out.doc["loops"] = arrows_json(q.loops);
  out.doc["arrows"] = arrows_json(q.arrows);
  out.doc["length_two_paths"] = q.length_two_paths;
  out.doc["zero_length_two_paths"] = q.zero_length_two_paths;
  out.doc["failed_relations"] = q.failed_relations;
  if (dot) {
    out.text << q.dot();
  } else {
    out.text << d << " vertices, " << q.loops.size() << " loops, " << q.arrows.size() << " arrows; "
             << q.zero_length_two_paths << "/" << q.length_two_paths << " length-two paths vanish\n";
    for (const auto& f : q.failed_relations) out.text << "  relation fails: " << f << "\n";
  }
  return q.ok() ? kOk : kFailed;
}

int cmd_trunc_center_check(int k, int d, const std::string& a_text, Output& out) {
  TruncParams t(k, d);
  auto a = vector_flag(a_text, d, "--a");
  bool cond, diag;
  try {
    cond = center_condition(t, a);
    diag = center_condition_diagonalizable(t, a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--a: ") + e.what());
  }
  out.doc["a"] = cyclo_vector_json(a);
  out.doc["condition"] = cond;
  out.doc["diagonalizable"] = diag;
  out.text << (cond ? "true" : "false") << "\n";
  if (cond != diag) std::cerr << "condition and diagonalizability disagree for a = " << format_cyclo_vector(a) << "\n";
  return cond == diag ? kOk : kFailed;
}

int cmd_trunc_center_hom(int k, int d, const std::string& aphi, const std::string& apsi, Output& out) {
  TruncParams t(k, d);
  auto x = vector_flag(aphi, d, "--aphi"), y = vector_flag(apsi, d, "--apsi");
  std::vector<std::vector<Cyclo>> basis;
  try {
    basis = center_hom(t, x, y);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out.doc["basis"] = json::array();
  for (const auto& v : basis) {
    out.doc["basis"].push_back(cyclo_vector_json(v));
    out.text << format_cyclo_vector(v) << "\n";
  }
  out.text << "dimension " << basis.size() << "\n";
  return kOk;
}

int cmd_trunc_center_free(int k, Output& out) {
  auto r = enumerate_center_d2(k);
  out.doc["k"] = k;
  json free = json::array();
  std::vector<std::string> names;
  for (int j : r.free) {
    free.push_back("a" + std::to_string(j));
    names.push_back("a" + std::to_string(j));
  }
  out.doc["free"] = free;
  out.doc["determined"] = json::object();
  out.text << "free: " << (names.empty() ? "none" : join(names, ", ")) << "\n";
  for (const auto& [j, p] : r.determined) {
    out.doc["determined"]["a" + std::to_string(j)] = p.str();
    out.text << "a" << j << " = " << p.str() << "\n";
  }
  out.doc["identity_after_substitution"] = r.identity_after_substitution;
  out.text << "substitution gives the identity: " << (r.identity_after_substitution ? "yes" : "NO") << "\n";
  return r.identity_after_substitution ? kOk : kFailed;
}

int cmd_trunc_vr(int d, int r, Output& out) {
  VrAction v;
  try {
    v = simple_transitive_Vr(d, r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out.doc["d"] = d;
  out.doc["r"] = r;
  out.doc["matrices"] = v.matrices;
  out.doc["transitive"] = v.transitive;
  out.doc["periodic"] = v.periodic;
  for (int i = 0; i < d; ++i) {
    out.text << "[F_" << i << "] =";
    for (const auto& row : v.matrices[i]) {
      out.text << " ";
      for (int x : row) out.text << x;
    }
    out.text << "\n";
  }
  out.text << "transitive: " << (v.transitive ? "yes" : "no") << ", [F_d] = 1: " << (v.periodic ? "yes" : "no") << "\n";
  return v.transitive && v.periodic ? kOk : kFailed;
}

// verify --------------------------------------------------------------------

int cmd_verify(const std::string& suite, const SuiteOptions& opts, Output& out) {
  std::vector<VerificationSuite> results;
  if (suite.empty()) {
    results = verify_all(opts);
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
      throw UsageError("unknown suite '" + suite + "'; one of: " + join(names, ", "));
    results.push_back(run_suite(suite, opts));
  }
  bool all = true;
  out.doc["suites"] = json::array();
  for (const auto& s : results) {
    all = all && s.ok();
    json checks = json::array();
    for (const auto& c : s.checks) {
      json params = json::object();
      for (const auto& [k, v] : c.params) params[k] = v;
      json entry = {{"id", c.id}, {"params", params}, {"source", to_string(c.source)}, {"pass", c.pass}, {"value", c.value}};
      if (!c.pass) entry["counterexample"] = c.counterexample;
      checks.push_back(entry);
    }
    out.doc["suites"].push_back({{"name", s.name},
                                 {"criterion", s.criterion},
                                 {"title", s.title},
                                 {"passed", s.passed()},
                                 {"total", s.checks.size()},
                                 {"ok", s.ok()},
                                 {"checks", checks}});
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %2d %-20s %5zu/%-5zu %7.2fs  %s\n", s.ok() ? "PASS" : "FAIL", s.criterion,
                  s.name.c_str(), s.passed(), s.checks.size(), s.seconds, s.title.c_str());
    out.text << line;
    for (const auto& c : s.checks)
      if (!c.pass) out.text << "       " << c.id << ": " << c.counterexample << "\n";
  }
  out.doc["ok"] = all;
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in ideal 2-categories of tree algebras and the truncated polynomial 2-category"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "print a structured JSON document");
  app.fallthrough();

  QuiverSource src;
  int n = 0, k = 0, d = 0, i = 0, j = 0, r = 0;
  bool dot = false, level_one = false, dump = false;
  std::string left, right, avec, aphi, apsi, suite;
  SuiteOptions opts;
  int suite_n = 0;
  std::function<int()> action;

  auto* paths = app.add_subcommand("paths", "list the paths of a quiver");
  src.add_to(paths);
  paths->callback([&] { action = [&] { return cmd_paths(src, out); }; });

  auto* ideals = app.add_subcommand("ideals", "list the ideals of a tree path algebra and the named ideals");
  src.add_to(ideals);
  ideals->add_flag("--level-one", level_one, "only ideals generated by arrows");
  ideals->callback([&] { action = [&] { return cmd_ideals(src, level_one, out); }; });

  auto* da = app.add_subcommand("da", "ideal 2-category of a tree algebra");
  da->require_subcommand(1);
  auto* da_cells = da->add_subcommand("cells", "left, right and two-sided cells");
  auto* da_classify = da->add_subcommand("classify", "simple transitive 2-representations");
  auto* da_center = da->add_subcommand("center", "Drinfeld center check");
  for (auto* c : {da_cells, da_classify, da_center}) src.add_to(c);
  da_cells->callback([&] { action = [&] { return cmd_da_cells(src, out); }; });
  da_classify->callback([&] { action = [&] { return cmd_da_classify(src, out); }; });
  da_center->callback([&] { action = [&] { return cmd_da_center(src, out); }; });

  auto* an = app.add_subcommand("an", "interval bimodules over A_n");
  an->require_subcommand(1);
  auto* an_compose = an->add_subcommand("compose", "M_left o M_right");
  auto* an_quiver = an->add_subcommand("quiver", "principal quiver with relations");
  auto* an_cells = an->add_subcommand("cells", "cells and stabilizers");
  auto* an_center = an->add_subcommand("center", "Drinfeld center");
  for (auto* c : {an_compose, an_quiver, an_cells, an_center})
    c->add_option("--n", n, "number of vertices")->required()->check(CLI::Range(1, 12));
  an_compose->add_option("--left", left, "interval i,j")->required();
  an_compose->add_option("--right", right, "interval i,j")->required();
  an_compose->add_flag("--dump", dump, "also print the tensor product bimodule");
  an_quiver->add_flag("--dot", dot, "emit graphviz text");
  an_compose->callback([&] { action = [&] { return cmd_an_compose(n, left, right, dump, out); }; });
  an_quiver->callback([&] { action = [&] { return cmd_an_quiver(n, dot, out); }; });
  an_cells->callback([&] { action = [&] { return cmd_an_cells(n, out); }; });
  an_center->callback([&] { action = [&] { return cmd_an_center(n, out); }; });

  auto* trunc = app.add_subcommand("trunc", "truncated polynomial 2-category over Q(zeta_d)");
  trunc->require_subcommand(1);
  auto* t_hom = trunc->add_subcommand("hom", "Hom(F_i, F_j)");
  auto* t_quiver = trunc->add_subcommand("quiver", "the quiver Q^D");
  auto* t_check = trunc->add_subcommand("center-check", "center condition for Phi(F_1) = M_a");
  auto* t_chom = trunc->add_subcommand("center-hom", "morphisms between center objects");
  auto* t_free = trunc->add_subcommand("center-free", "d = 2 parametrisation");
  auto* t_vr = trunc->add_subcommand("vr", "decategorified V_r");
  for (auto* c : {t_hom, t_quiver, t_check, t_chom})
    c->add_option("--k", k, "truncation degree")->required()->check(CLI::Range(2, 64));
  t_free->add_option("--k", k, "truncation degree")->required()->check(CLI::Range(2, 16));
  for (auto* c : {t_hom, t_quiver, t_check, t_chom, t_vr})
    c->add_option("--d", d, "order of zeta")->required()->check(CLI::Range(2, 64));
  t_hom->add_option("--i", i, "source index")->required();
  t_hom->add_option("--j", j, "target index")->required();
  t_quiver->add_flag("--dot", dot, "emit graphviz text");
  t_check->add_option("--a", avec, "comma-separated scalars, a_0 = 1")->required();
  t_chom->add_option("--aphi", aphi, "comma-separated scalars")->required();
  t_chom->add_option("--apsi", apsi, "comma-separated scalars")->required();
  t_vr->add_option("--r", r, "divisor of d")->required()->check(CLI::PositiveNumber);
  t_hom->callback([&] { action = [&] { return cmd_trunc_hom(k, d, i, j, out); }; });
  t_quiver->callback([&] { action = [&] { return cmd_trunc_quiver(k, d, dot, out); }; });
  t_check->callback([&] { action = [&] { return cmd_trunc_center_check(k, d, avec, out); }; });
  t_chom->callback([&] { action = [&] { return cmd_trunc_center_hom(k, d, aphi, apsi, out); }; });
  t_free->callback([&] { action = [&] { return cmd_trunc_center_free(k, out); }; });
  t_vr->callback([&] { action = [&] { return cmd_trunc_vr(d, r, out); }; });

  auto* verify = app.add_subcommand("verify", "run verification suites (all when --suite is absent)");
  verify->add_option("--suite", suite, "suite name");
  verify->add_option("--n", suite_n, "A_n suites: only this n")->check(CLI::Range(1, 12));
  verify->add_option("--kmax", opts.kmax, "largest k for trunc-d2")->check(CLI::Range(2, 16));
  verify->add_option("--trees", opts.tree_max, "largest tree in the corpus")->check(CLI::Range(1, 7));
  verify->add_option("--corpus", opts.corpus, "vectors per (k, d)")->check(CLI::Range(1, 100000));
  verify->callback([&] {
    action = [&] {
      if (suite_n > 0) opts.n = suite_n;
      return cmd_verify(suite, opts, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return out.emit(action());
  } catch (const DocumentError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFailed;
  }
}
