#include "twocat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "twocat/an.hpp"
#include "twocat/da.hpp"
#include "twocat/parallel.hpp"
#include "twocat/trunc.hpp"

namespace twocat {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Check make_check(std::string id, Params params, CheckSource source) {
  Check c;
  c.id = std::move(id);
  c.params = std::move(params);
  c.source = source;
  return c;
}

void fail(Check& c, const std::string& why) {
  c.pass = false;
  if (!c.counterexample.empty()) c.counterexample += "; ";
  c.counterexample += why;
}

std::string quiver_str(const Quiver& q) {
  std::string s;
  for (const auto& a : q.arrows()) s += (s.empty() ? "" : ",") + q.vertex(a.source) + "->" + q.vertex(a.target);
  return s.empty() ? q.vertex(0) : s;
}

std::string intervals_str(const std::vector<Interval>& v) {
  std::string s;
  for (const auto& f : v) s += (s.empty() ? "" : " ") + f.str();
  return s.empty() ? "0" : s;
}

std::string oracle_str(const std::vector<std::pair<Interval, int>>& v) {
  std::string s;
  for (const auto& [f, m] : v) s += (s.empty() ? "" : " + ") + (m == 1 ? "" : std::to_string(m) + "*") + f.str();
  return s.empty() ? "0" : s;
}

std::vector<int> n_range(const SuiteOptions& o, int max) {
  std::vector<int> out;
  if (o.n) {
    out.push_back(*o.n);
  } else {
    for (int n = 1; n <= max; ++n) out.push_back(n);
  }
  return out;
}

// Runs fn on every item into its own slot, preserving order.
template <class T, class Fn>
std::vector<Check> fan_out(const std::vector<T>& items, Fn fn) {
  std::vector<Check> out(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    try {
      out[i] = fn(items[i]);
    } catch (const std::exception& e) {
      out[i].id = "item " + std::to_string(i);
      out[i].pass = false;
      out[i].counterexample = std::string("exception: ") + e.what();
    }
  });
  return out;
}

void append(std::vector<Check>& to, std::vector<Check> more) {
  for (auto& c : more) to.push_back(std::move(c));
}

// 1
std::vector<Check> an_oracle(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : n_range(o, o.n_max)) {
    AnContext ctx(n);
    std::vector<std::pair<Interval, Interval>> pairs;
    for (auto a : ctx.intervals())
      for (auto b : ctx.intervals()) pairs.emplace_back(a, b);
    append(out, fan_out(pairs, [&](const std::pair<Interval, Interval>& p) {
             auto [a, b] = p;
             Check c = make_check("compose " + a.str() + " o " + b.str(),
                                  {{"n", std::to_string(n)}, {"left", a.str()}, {"right", b.str()}},
                                  CheckSource::oracle);
             auto closed = compose_closed(n, a, b);
             auto oracle = compose_oracle(ctx, a, b);
             c.value = oracle_str(oracle);
             c.pass = closed ? oracle == std::vector<std::pair<Interval, int>>{{*closed, 1}} : oracle.empty();
             if (!c.pass) fail(c, "closed form gives " + (closed ? closed->str() : std::string("0")));
             return c;
           }));
  }
  return out;
}

// 2
std::vector<Check> an_hom(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : n_range(o, o.n_max)) {
    AnContext ctx(n);
    std::vector<std::pair<Interval, Interval>> pairs;
    for (auto a : ctx.intervals())
      for (auto b : ctx.intervals()) pairs.emplace_back(a, b);
    append(out, fan_out(pairs, [&](const std::pair<Interval, Interval>& p) {
             auto [a, b] = p;
             Check c = make_check("hom " + a.str() + " -> " + b.str(),
                                  {{"n", std::to_string(n)}, {"source", a.str()}, {"target", b.str()}},
                                  CheckSource::closed_form);
             std::size_t dim = hom_basis(ctx.M(a), ctx.M(b)).size();
             int closed = hom_dim_closed(n, a, b);
             c.value = std::to_string(dim);
             c.pass = dim == static_cast<std::size_t>(closed);
             if (!c.pass) fail(c, "closed form gives " + std::to_string(closed));
             return c;
           }));
  }
  return out;
}

// 3
std::vector<Check> an_twisted(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : n_range(o, o.n_max)) {
    AnContext ctx(n);
    append(out, fan_out(level_one_ideals(ctx.algebra()), [&](const Ideal& i) {
             Check c = make_check("twisted " + i.str(), {{"n", std::to_string(n)}, {"ideal", i.str()}},
                                  CheckSource::closed_form);
             auto cut = interval_cut(n, i);
             std::vector<Interval> found;
             c.pass = true;
             for (const auto& s : decompose(twisted_identity(i))) {
               auto f = ctx.match(s.module);
               if (!f || !is_isomorphic_indecomposable(s.module, ctx.M(*f))) {
                 fail(c, "summand of dimension " + std::to_string(s.module.dim()) + " is not an interval bimodule");
                 continue;
               }
               for (int m = 0; m < s.multiplicity; ++m) found.push_back(*f);
             }
             std::sort(found.begin(), found.end());
             c.value = intervals_str(found);
             if (found != cut) fail(c, "interval cut gives " + intervals_str(cut));
             return c;
           }));
  }

  // 1 -alpha-> 2 -beta-> 3 -delta-> 5, 2 -gamma-> 4 twisted at <beta>.
  Check c = make_check("five-vertex example", {{"quiver", "1->2,2->3,2->4,3->5"}, {"ideal", "<beta>"}},
                       CheckSource::worked_example);
  try {
    auto a = make_algebra(Quiver({"1", "2", "3", "4", "5"},
                                 {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 1, 3}, {"delta", 2, 4}}, true));
    auto parts = decompose(twisted_identity(parse_ideal(a, {"beta"})));
    auto low = parse_ideal(a, {"e:3", "e:5"});
    auto sub = quotient_bimodule(Ideal::unit(a), low);
    auto top = ideal_bimodule(low);
    bool has_sub = false, has_top = false;
    std::size_t copies = 0;
    for (const auto& p : parts) {
      copies += p.multiplicity;
      has_sub = has_sub || is_isomorphic(p.module, sub);
      has_top = has_top || is_isomorphic(p.module, top);
    }
    c.value = std::to_string(copies) + " summands";
    c.pass = copies == 2 && has_sub && has_top;
    if (!has_sub) fail(c, "no summand isomorphic to A/<e:3, e:5>");
    if (!has_top) fail(c, "no summand isomorphic to <e:3, e:5>");
    if (copies != 2) fail(c, "expected 2 summands");
  } catch (const std::exception& e) {
    fail(c, std::string("exception: ") + e.what());
  }
  out.push_back(c);
  return out;
}

// 4
std::vector<Check> da_tensor(const SuiteOptions& o) {
  return fan_out(tree_quiver_corpus(o.tree_max), [&](const Quiver& q) {
    Check c = make_check("twisted tensor " + quiver_str(q), {{"quiver", quiver_str(q)}}, CheckSource::oracle);
    auto a = make_algebra(q);
    auto ideals = level_one_ideals(a);
    std::vector<Bimodule<Rational>> tw;
    for (const auto& i : ideals) tw.push_back(twisted_identity(i));
    std::size_t pairs = 0;
    c.pass = true;
    for (std::size_t x = 0; x < ideals.size(); ++x)
      for (std::size_t y = 0; y < ideals.size(); ++y) {
        ++pairs;
        auto sum = ideal_sum(ideals[x], ideals[y]);
        auto it = std::find(ideals.begin(), ideals.end(), sum);
        const auto expected = it == ideals.end() ? twisted_identity(sum) : tw[it - ideals.begin()];
        if (!is_isomorphic(tensor(tw[x], tw[y]), expected))
          fail(c, ideals[x].str() + " (x) " + ideals[y].str() + " is not the twist at " + sum.str());
      }
    c.value = std::to_string(pairs) + " pairs";
    return c;
  });
}

// 5
std::vector<Check> da_center(const SuiteOptions& o) {
  return fan_out(tree_quiver_corpus(o.tree_max), [&](const Quiver& q) {
    Check c = make_check("center " + quiver_str(q), {{"quiver", quiver_str(q)}}, CheckSource::oracle);
    auto a = make_algebra(q);
    auto r = center_DA(a);
    c.pass = r.ok();
    auto unit = Ideal::unit(a);
    std::size_t expected = 0;
    for (const auto& i : indecomposable_one_morphisms(a)) {
      if (i == unit) continue;
      ++expected;
      bool seen = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                              [&](const CenterWitnessDA& w) { return w.ideal == i && w.bimodules_differ; });
      if (!seen) fail(c, "no witness for " + i.str());
    }
    for (const auto& i : r.counterexamples) fail(c, "commutes with every ideal: " + i.str());
    for (const auto& u : r.unit_scalars)
      if (!u.k || *u.k != 1 || !u.unique || !u.matches_unit)
        fail(c, "unit component at " + u.ideal.str() + " not forced to the unit isomorphism");
    if (r.unit_end_dim != 1) fail(c, "End of the unit is " + std::to_string(r.unit_end_dim) + "-dimensional");
    c.value = std::to_string(r.witnesses.size()) + "/" + std::to_string(expected) + " witnesses, End dim " +
              std::to_string(r.unit_end_dim);
    return c;
  });
}

// 6
std::vector<Check> da_classify(const SuiteOptions& o) {
  auto out = fan_out(tree_quiver_corpus(o.tree_max), [&](const Quiver& q) {
    Check c = make_check("classify " + quiver_str(q), {{"quiver", quiver_str(q)}}, CheckSource::oracle);
    auto a = make_algebra(q);
    auto classes = classify_simple_transitive_DA(a);
    auto all = enumerate_ideals(a);
    c.pass = true;
    std::vector<std::vector<int>> chars;
    for (const auto& s : classes) {
      for (int g : s.ideal.generators())
        if (a->length(g) != 0) fail(c, s.ideal.str() + " has a generator of positive length");
      std::vector<Ideal> supersets;
      for (const auto& j : all)
        if (s.ideal.subset_of(j)) supersets.push_back(j);
      auto stab = s.stabilizer;
      std::sort(stab.begin(), stab.end());
      std::sort(supersets.begin(), supersets.end());
      if (stab != supersets) fail(c, "stabilizer of " + s.ideal.str() + " is not the set of supersets");
      if (std::find(chars.begin(), chars.end(), s.character) != chars.end())
        fail(c, "character of " + s.ideal.str() + " repeats");
      chars.push_back(s.character);
    }
    c.value = std::to_string(classes.size()) + " classes";
    return c;
  });
  Check c = make_check("A_2 classes", {{"n", "2"}}, CheckSource::worked_example);
  auto classes = classify_simple_transitive_DA(make_algebra(Quiver::linear(2)));
  c.value = std::to_string(classes.size()) + " classes";
  c.pass = classes.size() == 3;
  if (!c.pass) fail(c, "expected 3 classes");
  out.push_back(c);
  return out;
}

std::uint32_t corpus_seed(int k, int d) { return static_cast<std::uint32_t>(1000 * k + d); }

// 7
std::vector<Check> trunc_center_small(const SuiteOptions& o) {
  std::vector<std::pair<int, int>> kd;
  for (int d = 2; d <= 5; ++d)
    for (int k = 2; k <= d; ++k) kd.emplace_back(k, d);
  return fan_out(kd, [&](const std::pair<int, int>& p) {
    auto [k, d] = p;
    Check c = make_check("center condition k=" + std::to_string(k) + " d=" + std::to_string(d),
                         {{"k", std::to_string(k)}, {"d", std::to_string(d)}}, CheckSource::closed_form);
    TruncParams t(k, d);
    auto corpus = center_corpus(t, o.corpus, corpus_seed(k, d));
    std::size_t holds = 0;
    c.pass = true;
    for (const auto& a : corpus) {
      if (center_condition(t, a))
        ++holds;
      else
        fail(c, "fails for a = " + format_cyclo_vector(a));
    }
    c.value = std::to_string(holds) + "/" + std::to_string(corpus.size());
    return c;
  });
}

// 8
std::vector<Check> trunc_center_large(const SuiteOptions& o) {
  std::vector<std::pair<int, int>> kd{{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}};
  auto out = fan_out(kd, [&](const std::pair<int, int>& p) {
    auto [k, d] = p;
    Check c = make_check("center condition iff diagonalizable k=" + std::to_string(k) + " d=" + std::to_string(d),
                         {{"k", std::to_string(k)}, {"d", std::to_string(d)}}, CheckSource::oracle);
    TruncParams t(k, d);
    auto corpus = center_corpus(t, o.corpus, corpus_seed(k, d));
    std::size_t holds = 0;
    c.pass = true;
    for (const auto& a : corpus) {
      bool cond = center_condition(t, a);
      holds += cond;
      if (cond != center_condition_diagonalizable(t, a))
        fail(c, "a = " + format_cyclo_vector(a) + (cond ? " satisfies" : " violates") +
                    " the condition but the diagonalizability test disagrees");
    }
    c.value = std::to_string(holds) + " of " + std::to_string(corpus.size()) + " satisfy the condition";
    return c;
  });
  TruncParams t(3, 2);
  for (auto [text, expected] : {std::pair<const char*, bool>{"1,2,2", true}, {"1,2,1", false}}) {
    Check c = make_check(std::string("witness ") + text, {{"k", "3"}, {"d", "2"}, {"a", text}},
                         CheckSource::worked_example);
    auto a = parse_cyclo_vector(text, 2);
    bool cond = center_condition(t, a), diag = center_condition_diagonalizable(t, a);
    c.value = cond ? "true" : "false";
    c.pass = cond == expected && diag == expected;
    if (!c.pass) fail(c, std::string("expected ") + (expected ? "true" : "false"));
    out.push_back(c);
  }
  return out;
}

// 9
std::vector<Check> trunc_hom_d2(const SuiteOptions& o) {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (int s = 0; s < o.pairs; ++s) pairs.emplace_back(Rational(3 * s - 10, s % 4 + 1), Rational(7 - 2 * s, s % 3 + 1));
  for (auto& [a, b] : pairs) {
    a.canonicalize();
    b.canonicalize();
  }
  return fan_out(pairs, [&](const std::pair<Rational, Rational>& p) {
    const auto& [a, b] = p;
    Check c = make_check("center hom a=" + a.get_str() + " b=" + b.get_str(),
                         {{"k", "2"}, {"d", "2"}, {"a", a.get_str()}, {"b", b.get_str()}}, CheckSource::closed_form);
    TruncParams t(2, 2);
    auto sols = center_hom(t, {Cyclo(1), Cyclo(a)}, {Cyclo(1), Cyclo(b)});
    Rational expected = (b - a) / 2;
    c.pass = sols.size() == 1 && !sols[0][0].is_zero() && sols[0][1] / sols[0][0] == Cyclo(expected);
    c.value = std::to_string(sols.size()) + "-dimensional";
    if (sols.size() == 1 && !sols[0][0].is_zero()) c.value += ", spanned by " + format_cyclo_vector({Cyclo(1), sols[0][1] / sols[0][0]});
    if (!c.pass) fail(c, "expected the span of 1," + expected.get_str());
    return c;
  });
}

// 10
std::vector<Check> trunc_d2(const SuiteOptions& o) {
  std::vector<int> ks;
  for (int k = 2; k <= o.kmax; ++k) ks.push_back(k);
  return fan_out(ks, [&](int k) {
    Check c = make_check("d=2 parameters k=" + std::to_string(k), {{"k", std::to_string(k)}}, CheckSource::oracle);
    auto r = enumerate_center_d2(k);
    c.pass = true;
    std::size_t expected = static_cast<std::size_t>(k / 2);
    std::string free;
    for (int j : r.free) {
      free += (free.empty() ? "a" : ",a") + std::to_string(j);
      if (j % 2 == 0) fail(c, "free parameter a" + std::to_string(j) + " has even index");
    }
    if (r.free.size() != expected) fail(c, "expected " + std::to_string(expected) + " free parameters");
    if (!r.identity_after_substitution) fail(c, "substitution does not give the identity");
    // A few rational assignments of the free parameters.
    TruncParams t(k, 2);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> values(k - 1, Rational(0));
      for (int j : r.free) values[j - 1] = Rational(trial * j - 2, j + 1);
      std::vector<Cyclo> a{Cyclo(1)};
      for (int j = 1; j < k; ++j) {
        auto it = r.determined.find(j);
        a.push_back(it == r.determined.end() ? Cyclo(values[j - 1]) : Cyclo(it->second.evaluate(values)));
      }
      if (!center_condition(t, a)) fail(c, "a = " + format_cyclo_vector(a) + " fails the condition");
    }
    c.value = std::to_string(r.free.size()) + " free (" + (free.empty() ? "none" : free) + ")";
    return c;
  });
}

// 11
std::vector<Check> trunc_horizontal(const SuiteOptions&) {
  std::vector<std::pair<int, int>> kd;
  for (int k = 2; k <= 4; ++k)
    for (int d = 2; d <= 4; ++d) kd.emplace_back(k, d);
  return fan_out(kd, [&](const std::pair<int, int>& p) {
    auto [k, d] = p;
    Check c = make_check("horizontal k=" + std::to_string(k) + " d=" + std::to_string(d),
                         {{"k", std::to_string(k)}, {"d", std::to_string(d)}}, CheckSource::oracle);
    auto r = horizontal_oracle(TruncParams(k, d));
    c.pass = r.ok();
    c.value = std::to_string(r.checks - r.mismatches.size()) + "/" + std::to_string(r.checks);
    for (const auto& m : r.mismatches) fail(c, m);
    return c;
  });
}

// 12
std::vector<Check> trunc_quiver(const SuiteOptions&) {
  std::vector<Check> out;
  for (int d : {3, 4}) {
    Check c = make_check("Q^D k=2 d=" + std::to_string(d), {{"k", "2"}, {"d", std::to_string(d)}},
                         CheckSource::worked_example);
    auto q = quiver_QD(TruncParams(2, d));
    std::size_t loops = q.loops.size(), arrows = q.arrows.size();
    c.value = std::to_string(d) + " vertices, " + std::to_string(loops) + " loops, " + std::to_string(arrows) +
              " arrows, " + std::to_string(q.zero_length_two_paths) + "/" + std::to_string(q.length_two_paths) +
              " length-two paths vanish";
    c.pass = q.ok() && loops == static_cast<std::size_t>(d) && arrows == static_cast<std::size_t>(d * (d - 1)) &&
             q.zero_length_two_paths == q.length_two_paths;
    for (const auto& f : q.failed_relations) fail(c, f);
    if (!c.pass && c.counterexample.empty()) fail(c, "counts differ from the expected quiver");
    out.push_back(c);
  }
  return out;
}

// 13
std::vector<Check> an_principal(const SuiteOptions& o) {
  return fan_out(n_range(o, o.principal_max), [&](int n) {
    Check c = make_check("principal quiver n=" + std::to_string(n), {{"n", std::to_string(n)}}, CheckSource::oracle);
    auto q = principal_quiver(AnContext(n));
    std::map<std::string, std::size_t> kinds;
    c.pass = true;
    for (const auto& r : q.relations) {
      ++kinds[r.kind];
      if (!r.holds) fail(c, r.kind + " relation at " + intervals_str(r.vertices) + " fails");
    }
    c.value = std::to_string(q.vertices.size()) + " vertices, " + std::to_string(q.arrows.size()) + " arrows, " +
              std::to_string(kinds["square"]) + " squares, " + std::to_string(kinds["zero"]) + " zero relations";
    return c;
  });
}

// Adds a block from the first summand into the second at the first datum where
// both are nonzero; Theta stays invertible.
bool perturb(std::vector<SplitDatum>& data) {
  for (auto it = data.rbegin(); it != data.rend(); ++it) {
    auto& d = *it;
    Matrix<Rational> x(d.project_after[1].rows(), d.project_before[0].rows());
    if (x.rows() == 0 || x.cols() == 0) continue;
    x(0, 0) = Rational(1);
    d.theta = d.theta + d.inject_after[1] * x * d.project_before[0];
    return true;
  }
  return false;
}

// 14
std::vector<Check> splitting(const SuiteOptions& o) {
  auto out = fan_out(tree_quiver_corpus(std::min(o.tree_max, 4)), [&](const Quiver& q) {
    Check c = make_check("unit sums " + quiver_str(q), {{"quiver", quiver_str(q)}}, CheckSource::oracle);
    auto a = make_algebra(q);
    c.pass = true;
    for (int copies : {2, 3}) {
      auto data = unit_direct_sum_data(a, copies);
      if (!splitting_check(data)) fail(c, std::to_string(copies) + " copies do not split");
      if (!perturb(data) || splitting_check(data)) fail(c, "perturbed sum of " + std::to_string(copies) + " splits");
    }
    c.value = c.pass ? "sums split, perturbed sums do not" : "mismatch";
    return c;
  });
  for (int n = 1; n <= 3; ++n) {
    AnContext ctx(n);
    std::vector<std::pair<Interval, Interval>> pairs;
    for (auto f : ctx.intervals())
      for (auto g : ctx.intervals())
        if (!(g < f)) pairs.emplace_back(f, g);
    append(out, fan_out(pairs, [&](const std::pair<Interval, Interval>& p) {
             auto [f, g] = p;
             Check c = make_check("interval sum " + f.str() + " + " + g.str(),
                                  {{"n", std::to_string(n)}, {"f", f.str()}, {"g", g.str()}}, CheckSource::oracle);
             c.pass = true;
             if (!splitting_check(interval_direct_sum_data(ctx, f, g, false))) fail(c, "direct sum does not split");
             if (splitting_check(interval_direct_sum_data(ctx, f, g, true))) fail(c, "perturbed sum splits");
             c.value = c.pass ? "sum splits, perturbed sum does not" : "mismatch";
             return c;
           }));
  }
  return out;
}

struct SuiteDef {
  std::string name, title;
  std::function<std::vector<Check>(const SuiteOptions&)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> all{
      {"an-oracle", "A_n composition: closed form against the tensor oracle", an_oracle},
      {"an-hom", "A_n Hom dimensions against the closed form", an_hom},
      {"an-twisted", "twisted identities decompose along the interval cut", an_twisted},
      {"da-tensor", "tensor of twisted identities is the twist at the sum", da_tensor},
      {"da-center", "center of D_A: witnesses and the unit", da_center},
      {"da-classify", "simple transitive classes of D_A", da_classify},
      {"trunc-center-small", "center condition holds automatically for k <= d", trunc_center_small},
      {"trunc-center-large", "center condition iff diagonalizable for k > d", trunc_center_large},
      {"trunc-hom-d2", "center Hom for k = d = 2", trunc_hom_d2},
      {"trunc-d2", "d = 2 parametrisation", trunc_d2},
      {"trunc-horizontal", "horizontal composition formulas against the tensor oracle", trunc_horizontal},
      {"trunc-quiver", "quiver Q^D for k = 2", trunc_quiver},
      {"an-principal", "principal quiver relations", an_principal},
      {"splitting", "splitting criterion on direct sums", splitting},
  };
  return all;
}

}  // namespace

std::string to_string(CheckSource s) {
  switch (s) {
    case CheckSource::closed_form:
      return "closed-form";
    case CheckSource::oracle:
      return "oracle";
    case CheckSource::worked_example:
      return "worked-example";
  }
  return "oracle";
}

std::size_t VerificationSuite::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

VerificationSuite run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto& all = suites();
  auto it = std::find_if(all.begin(), all.end(), [&](const SuiteDef& s) { return s.name == name; });
  if (it == all.end()) throw std::invalid_argument("unknown suite: " + name);
  VerificationSuite suite;
  suite.name = it->name;
  suite.title = it->title;
  suite.criterion = static_cast<int>(it - all.begin()) + 1;
  auto start = std::chrono::steady_clock::now();
  try {
    suite.checks = it->run(opts);
  } catch (const std::exception& e) {
    Check c = make_check(name, {}, CheckSource::oracle);
    fail(c, std::string("exception: ") + e.what());
    suite.checks.push_back(c);
  }
  suite.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return suite;
}

std::vector<VerificationSuite> verify_all(const SuiteOptions& opts) {
  std::vector<VerificationSuite> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opts));
  return out;
}

}  // namespace twocat
