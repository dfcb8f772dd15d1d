#include "twocat/an.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "twocat/da.hpp"
#include "twocat/parallel.hpp"

namespace twocat {

namespace {

using RMatrix = Matrix<Rational>;
using Support = std::vector<std::pair<int, int>>;

Support support_of(const Bimodule<Rational>& m) {
  Support s;
  for (std::size_t i = 0; i < m.dim(); ++i) s.emplace_back(m.left_vertex[i], m.right_vertex[i]);
  std::sort(s.begin(), s.end());
  return s;
}

void check_bounds(int n, Interval f) {
  if (n < 1 || f.i < 1 || f.i > f.j || f.j > n)
    throw std::invalid_argument("interval " + f.str() + " out of bounds for n = " + std::to_string(n));
}

Ideal j_ideal(const AlgebraPtr& a, int n, int p) {
  std::vector<int> gens;
  for (int v = p; v <= n; ++v) gens.push_back(a->trivial(v - 1));
  std::sort(gens.begin(), gens.end());
  return Ideal(a, gens);
}

// Tensor products of interval bimodules, per ordered pair.
class TensorTable {
 public:
  explicit TensorTable(const AnContext& ctx) : ctx_(ctx) {
    for (auto f : ctx.intervals())
      for (auto g : ctx.intervals()) table_.emplace(std::make_pair(f, g), tensor_full(ctx.M(f), ctx.M(g)));
  }
  const TensorProduct<Rational>& operator()(Interval f, Interval g) const { return table_.at({f, g}); }

 private:
  const AnContext& ctx_;
  std::map<std::pair<Interval, Interval>, TensorProduct<Rational>> table_;
};

RMatrix identity_of(const Bimodule<Rational>& m) { return RMatrix::identity(m.dim()); }

// Theta(A) for F as the unit isomorphism lambda^-1 rho : F o A -> A o F.
RMatrix unit_theta(const AnContext& ctx, const TensorProduct<Rational>& fa, const TensorProduct<Rational>& af,
                   const Bimodule<Rational>& mf) {
  auto lambda = inverse(left_unitor(ctx.algebra(), af, mf));
  if (!lambda) throw std::logic_error("left unitor is not invertible");
  return *lambda * right_unitor(ctx.algebra(), fa, mf);
}

std::vector<Rational> dense(const std::vector<std::pair<int, Rational>>& coords, std::size_t n) {
  std::vector<Rational> v(n, Rational(0));
  for (const auto& [k, c] : coords) v[k] += c;
  return v;
}

int index_of(const std::vector<Interval>& list, Interval f) {
  auto it = std::find(list.begin(), list.end(), f);
  if (it == list.end()) throw std::invalid_argument("unknown interval " + f.str());
  return static_cast<int>(it - list.begin());
}

}  // namespace

std::string Interval::str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Interval parse_interval(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') t += c;
  auto comma = t.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("interval must read i,j: " + text);
  try {
    std::size_t used1 = 0, used2 = 0;
    int i = std::stoi(t.substr(0, comma), &used1);
    int j = std::stoi(t.substr(comma + 1), &used2);
    if (used1 != comma || used2 != t.size() - comma - 1) throw std::invalid_argument("trailing characters");
    return {i, j};
  } catch (const std::exception&) {
    throw std::invalid_argument("interval must read i,j: " + text);
  }
}

std::vector<Interval> all_intervals(int n) {
  std::vector<Interval> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back({i, j});
  return out;
}

AnContext::AnContext(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  a_ = make_algebra(Quiver::linear(n));
  intervals_ = all_intervals(n);
}

Ideal AnContext::J(int p) const {
  if (p < 1 || p > n_ + 1) throw std::invalid_argument("J_p needs 1 <= p <= n + 1");
  return j_ideal(a_, n_, p);
}

void AnContext::check(Interval f) const { check_bounds(n_, f); }

const Bimodule<Rational>& AnContext::M(Interval f) const {
  check(f);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(f);
    if (it != cache_.end()) return *it->second;
  }
  auto built = std::make_shared<const Bimodule<Rational>>(quotient_bimodule(J(f.i), J(f.j + 1)));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.emplace(f, std::move(built));
  return *it->second;
}

std::optional<Interval> AnContext::match(const Bimodule<Rational>& m) const {
  // Bigrades of M_{i,j}: (t, s) with s <= t and i <= t <= j, 0-based.
  auto s = support_of(m);
  if (s.empty()) return std::nullopt;
  int lo = s.front().first, hi = s.back().first;
  Interval f{lo + 1, hi + 1};
  if (f.j > n_) return std::nullopt;
  if (support_of(M(f)) != s) return std::nullopt;
  return f;
}

int AnContext::top_index(Interval f, int v) const {
  const auto& m = M(f);
  std::string label = "e:" + std::to_string(v);
  auto it = std::find(m.labels.begin(), m.labels.end(), label);
  return it == m.labels.end() ? -1 : static_cast<int>(it - m.labels.begin());
}

Bimodule<Rational> build_M(int n, int i, int j) {
  Interval f{i, j};
  check_bounds(n, f);
  auto a = make_algebra(Quiver::linear(n));
  return quotient_bimodule(j_ideal(a, n, i), j_ideal(a, n, j + 1));
}

std::optional<Interval> compose_closed(int n, Interval a, Interval b) {
  check_bounds(n, a);
  check_bounds(n, b);
  Interval c{std::max(a.i, b.i), std::min(a.j, b.j)};
  if (c.i > c.j) return std::nullopt;
  return c;
}

std::vector<std::pair<Interval, int>> compose_oracle(const AnContext& ctx, Interval a, Interval b) {
  auto t = tensor(ctx.M(a), ctx.M(b));
  std::vector<std::pair<Interval, int>> out;
  if (t.dim() == 0) return out;
  for (const auto& s : decompose(t)) {
    auto f = ctx.match(s.module);
    if (!f || !is_isomorphic_indecomposable(s.module, ctx.M(*f)))
      throw std::logic_error("summand of " + a.str() + " o " + b.str() + " is not an interval bimodule");
    out.emplace_back(*f, s.multiplicity);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int hom_dim_closed(int n, Interval a, Interval b) {
  check_bounds(n, a);
  check_bounds(n, b);
  return b.i <= a.i && a.i <= b.j && b.j <= a.j ? 1 : 0;
}

std::optional<Matrix<Rational>> sigma(const AnContext& ctx, Interval a, Interval b) {
  if (!hom_dim_closed(ctx.n(), a, b)) return std::nullopt;
  const auto& src = ctx.M(a);
  const auto& dst = ctx.M(b);
  std::map<std::string, std::size_t> row;
  for (std::size_t r = 0; r < dst.dim(); ++r) row[dst.labels[r]] = r;
  RMatrix m(dst.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    auto it = row.find(src.labels[c]);
    if (it != row.end()) m(it->second, c) = Rational(1);
  }
  return m;
}

std::vector<Interval> interval_cut(int n, const Ideal& level_one) {
  if (!is_complementary(level_one).level_one) throw std::invalid_argument("interval cut needs an ideal generated by arrows");
  const auto& a = level_one.algebra();
  std::vector<int> cuts;  // a_i : i -> i+1 cuts after row i
  for (int g : level_one.generators()) cuts.push_back(a->source(g) + 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> out;
  int start = 1;
  for (int c : cuts) {
    out.push_back({start, c});
    start = c + 1;
  }
  out.push_back({start, n});
  return out;
}

bool PrincipalQuiverAn::ok() const {
  return std::all_of(relations.begin(), relations.end(), [](const QuiverRelationAn& r) { return r.holds; });
}

std::string PrincipalQuiverAn::dot() const {
  auto node = [](Interval f) { return "\"M" + std::to_string(f.i) + "," + std::to_string(f.j) + "\""; };
  std::ostringstream os;
  os << "digraph principal_quiver {\n  rankdir=TB;\n";
  for (auto v : vertices) os << "  " << node(v) << ";\n";
  for (const auto& a : arrows) os << "  " << node(a.from) << " -> " << node(a.to) << ";\n";
  for (const auto& r : relations) {
    if (r.kind == "composition") continue;
    os << "  " << node(r.vertices.front()) << " -> " << node(r.vertices.back()) << " [style=dashed, arrowhead=none, label=\""
       << (r.kind == "zero" ? "0" : "comm") << (r.holds ? "" : " FAILS") << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

PrincipalQuiverAn principal_quiver(const AnContext& ctx) {
  int n = ctx.n();
  PrincipalQuiverAn q;
  q.n = n;
  q.vertices = ctx.intervals();
  // An arrow u -> v stands for the map M_v -> M_u.
  auto map_of = [&](Interval u, Interval v) {
    auto s = sigma(ctx, v, u);
    if (!s) throw std::logic_error("no map for arrow " + u.str() + " -> " + v.str());
    return *s;
  };
  for (auto v : q.vertices) {
    if (v.j < n) q.arrows.push_back({v, {v.i, v.j + 1}, map_of(v, {v.i, v.j + 1})});
    if (v.i < v.j) q.arrows.push_back({v, {v.i + 1, v.j}, map_of(v, {v.i + 1, v.j})});
  }
  auto along = [&](Interval u, Interval m, Interval w) { return map_of(u, m) * map_of(m, w); };
  for (auto v : q.vertices) {
    if (v.i < v.j && v.j < n) {
      Interval r{v.i, v.j + 1}, d{v.i + 1, v.j}, w{v.i + 1, v.j + 1};
      auto p1 = along(v, r, w), p2 = along(v, d, w);
      q.relations.push_back({"square", {v, r, d, w}, p1 == p2 && !p1.is_zero()});
    }
    if (v.i == v.j && v.j < n) {
      Interval r{v.i, v.j + 1}, w{v.i + 1, v.j + 1};
      q.relations.push_back({"zero", {v, r, w}, along(v, r, w).is_zero()});
    }
  }
  // sigma(b, c) o sigma(a, b) against sigma(a, c) on the whole grid.
  for (auto a : q.vertices)
    for (auto b : q.vertices) {
      auto ab = sigma(ctx, a, b);
      if (!ab) continue;
      for (auto c : q.vertices) {
        auto bc = sigma(ctx, b, c);
        if (!bc) continue;
        RMatrix composite = *bc * *ab;
        auto ac = sigma(ctx, a, c);
        bool holds = ac ? composite == *ac : composite.is_zero();
        q.relations.push_back({"composition", {a, b, c}, holds});
      }
    }
  return q;
}

CellStructure cells_An(const AnContext& ctx) {
  const auto& iv = ctx.intervals();
  std::vector<std::vector<std::vector<int>>> table(iv.size(), std::vector<std::vector<int>>(iv.size()));
  parallel_for(iv.size() * iv.size(), [&](std::size_t x) {
    std::size_t h = x / iv.size(), f = x % iv.size();
    for (const auto& [g, mult] : compose_oracle(ctx, iv[h], iv[f])) {
      (void)mult;
      table[h][f].push_back(index_of(iv, g));
    }
  });
  std::vector<std::string> names;
  for (auto f : iv) names.push_back(f.str());
  return cell_structure(std::move(names), table);
}

std::vector<Interval> st_set_closed(int n, Interval f) {
  check_bounds(n, f);
  std::vector<Interval> out;
  for (auto h : all_intervals(n))
    if (h.i <= f.i && f.j <= h.j) out.push_back(h);
  return out;
}

std::vector<Interval> st_set_oracle(const AnContext& ctx, Interval f) {
  std::vector<Interval> out;
  for (auto h : ctx.intervals()) {
    auto parts = compose_oracle(ctx, h, f);
    if (parts.size() == 1 && parts[0].first == f && parts[0].second == 1) out.push_back(h);
  }
  return out;
}

namespace {

RMatrix braiding_map(const AnContext& ctx, Interval f, Interval k, const TensorProduct<Rational>& fk,
                     const TensorProduct<Rational>& kf) {
  if (fk.module.dim() == 0 && kf.module.dim() == 0) return RMatrix(0, 0);
  auto h = hom_basis(fk.module, kf.module);
  if (h.size() != 1) throw std::logic_error("Hom(" + f.str() + " o " + k.str() + ", " + k.str() + " o " + f.str() + ") is not one-dimensional");
  int v = std::max(f.i, k.i);
  int tf = ctx.top_index(f, v), tk = ctx.top_index(k, v);
  if (tf < 0 || tk < 0) throw std::logic_error("missing top generator");
  auto x = dense(fk.project(tf, tk), fk.module.dim());
  auto y = dense(kf.project(tk, tf), kf.module.dim());
  auto hx = h[0] * x;
  std::optional<Rational> scale;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (is_zero(hx[r])) {
      if (!is_zero(y[r])) throw std::logic_error("braiding generator does not map the top class to a multiple of its counterpart");
      continue;
    }
    Rational s = y[r] / hx[r];
    if (scale && *scale != s) throw std::logic_error("braiding generator does not map the top class to a multiple of its counterpart");
    scale = s;
  }
  if (!scale) throw std::logic_error("braiding generator kills the top class");
  return h[0].scaled(*scale);
}

struct CenterWork {
  const AnContext& ctx;
  TensorTable tensors;
  std::vector<BraidingFamily> braidings;  // indexed like ctx.intervals()

  explicit CenterWork(const AnContext& c) : ctx(c), tensors(c) {
    for (auto f : c.intervals()) {
      BraidingFamily b;
      b.f = f;
      b.ks = c.intervals();
      for (auto k : c.intervals()) b.maps.push_back(braiding_map(c, f, k, tensors(f, k), tensors(k, f)));
      braidings.push_back(std::move(b));
    }
  }
};

}  // namespace

BraidingFamily braiding(const AnContext& ctx, Interval f) {
  BraidingFamily b;
  b.f = f;
  b.ks = ctx.intervals();
  const auto& mf = ctx.M(f);
  for (auto k : b.ks) {
    const auto& mk = ctx.M(k);
    b.maps.push_back(braiding_map(ctx, f, k, tensor_full(mf, mk), tensor_full(mk, mf)));
  }
  return b;
}

bool hexagon_holds(const AnContext& ctx, Interval f, const std::vector<Matrix<Rational>>& thetas, Interval k,
                   Interval h) {
  const auto& iv = ctx.intervals();
  if (thetas.size() != iv.size()) throw std::invalid_argument("one Theta per interval expected");
  const auto &mf = ctx.M(f), &mk = ctx.M(k), &mh = ctx.M(h);
  const RMatrix& tk = thetas[index_of(iv, k)];
  const RMatrix& th = thetas[index_of(iv, h)];

  auto kh = tensor_full(mk, mh);
  auto f_kh = tensor_full(mf, kh.module);
  auto kh_f = tensor_full(kh.module, mf);
  if (f_kh.module.dim() == 0 && kh_f.module.dim() == 0) return true;

  auto fk = tensor_full(mf, mk), kf = tensor_full(mk, mf);
  auto fh = tensor_full(mf, mh), hf = tensor_full(mh, mf);
  auto fk_h = tensor_full(fk.module, mh), kf_h = tensor_full(kf.module, mh);
  auto k_fh = tensor_full(mk, fh.module), k_hf = tensor_full(mk, hf.module);

  auto a_fkh = inverse(associator(fk, fk_h, kh, f_kh));
  auto a_khf = inverse(associator(kh, kh_f, hf, k_hf));
  if (!a_fkh || !a_khf) throw std::logic_error("associator is not invertible");
  RMatrix chain = *a_khf * tensor_map(k_fh, k_hf, identity_of(mk), th) * associator(kf, kf_h, fh, k_fh) *
                  tensor_map(fk_h, kf_h, tk, identity_of(mh)) * *a_fkh;

  // Theta(K o H) transported from the interval isomorphic to K o H.
  auto c = compose_closed(ctx.n(), k, h);
  if (!c) return chain.is_zero() && kh.module.dim() == 0;
  const auto& mc = ctx.M(*c);
  auto phis = hom_basis(kh.module, mc);
  if (phis.size() != 1) return false;
  auto phi_inv = inverse(phis[0]);
  if (!phi_inv) return false;
  auto fc = tensor_full(mf, mc), cf = tensor_full(mc, mf);
  RMatrix transported = tensor_map(cf, kh_f, *phi_inv, identity_of(mf)) * thetas[index_of(iv, *c)] *
                        tensor_map(f_kh, fc, identity_of(mf), phis[0]);
  return transported == chain;
}

bool CenterReportAn::ok() const {
  for (const auto& o : objects)
    if (o.solution_dim != 1 || !o.normalised_is_braiding || !o.natural_everywhere || !o.hexagon || o.end_dim != 1)
      return false;
  for (const auto& h : homs)
    if (h.hom_dim != h.center_dim) return false;
  for (const auto& s : splittings)
    if (!s.direct_sum_splits || s.perturbed_splits) return false;
  return true;
}

namespace {

CenterObjectReportAn center_object(const CenterWork& w, std::size_t fi) {
  const AnContext& ctx = w.ctx;
  const auto& iv = ctx.intervals();
  Interval f = iv[fi];
  int n = ctx.n();
  Interval unit{1, n};
  CenterObjectReportAn rep;
  rep.f = f;

  // Unknowns: coordinates of Theta(K) in a basis of Hom(F o K, K o F).
  std::vector<std::vector<RMatrix>> basis;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (auto k : iv) {
    offset.push_back(unknowns);
    basis.push_back(hom_basis(w.tensors(f, k).module, w.tensors(k, f).module));
    unknowns += basis.back().size();
  }

  // Naturality along alpha : K -> H, i.e. Theta(H) (id_F o0 alpha) = (alpha o0 id_F) Theta(K).
  std::vector<std::vector<RMatrix>> equations;
  auto natural = [&](Interval k, Interval h, const RMatrix& alpha) {
    std::size_t ki = index_of(iv, k), hi = index_of(iv, h);
    std::vector<RMatrix> eq(unknowns);
    RMatrix right = tensor_map(w.tensors(f, k), w.tensors(f, h), identity_of(ctx.M(f)), alpha);
    RMatrix left = tensor_map(w.tensors(k, f), w.tensors(h, f), alpha, identity_of(ctx.M(f)));
    for (std::size_t u = 0; u < basis[hi].size(); ++u) eq[offset[hi] + u] = basis[hi][u] * right;
    for (std::size_t u = 0; u < basis[ki].size(); ++u) {
      RMatrix t = left * basis[ki][u];
      eq[offset[ki] + u] = eq[offset[ki] + u].rows() == 0 && eq[offset[ki] + u].cols() == 0 ? -t : eq[offset[ki] + u] - t;
    }
    equations.push_back(std::move(eq));
  };
  for (int p = 2; p <= n; ++p) natural({p, n}, unit, *sigma(ctx, {p, n}, unit));
  for (int p = 1; p <= n; ++p)
    for (int q = p; q < n; ++q) natural({p, n}, {p, q}, *sigma(ctx, {p, n}, {p, q}));
  auto sols = joint_nullspace(unknowns, equations);
  rep.solution_dim = sols.size();

  const auto& fam = w.braidings[fi];
  std::vector<RMatrix> thetas;
  if (sols.size() == 1) {
    for (std::size_t t = 0; t < iv.size(); ++t) {
      RMatrix th(w.tensors(iv[t], f).module.dim(), w.tensors(f, iv[t]).module.dim());
      for (std::size_t u = 0; u < basis[t].size(); ++u) th = th + basis[t][u].scaled(sols[0][offset[t] + u]);
      thetas.push_back(std::move(th));
    }
    // Normalise by Theta(A) = lambda^-1 rho.
    std::size_t ai = index_of(iv, unit);
    RMatrix target = unit_theta(ctx, w.tensors(f, unit), w.tensors(unit, f), ctx.M(f));
    std::optional<Rational> scale;
    bool proportional = !thetas[ai].is_zero();
    for (std::size_t r = 0; r < target.rows() && proportional; ++r)
      for (std::size_t c = 0; c < target.cols(); ++c) {
        if (is_zero(thetas[ai](r, c))) {
          if (!is_zero(target(r, c))) proportional = false;
          continue;
        }
        Rational s = target(r, c) / thetas[ai](r, c);
        if (scale && *scale != s) proportional = false;
        scale = s;
      }
    if (proportional && scale) {
      for (auto& th : thetas) th = th.scaled(*scale);
      rep.normalised_is_braiding = thetas == fam.maps;
    }
  }
  const auto& eps = fam.maps;

  rep.natural_everywhere = true;
  for (auto k : iv)
    for (auto h : iv) {
      RMatrix idf = identity_of(ctx.M(f));
      for (const auto& alpha : hom_basis(ctx.M(k), ctx.M(h))) {
        RMatrix lhs = eps[index_of(iv, h)] * tensor_map(w.tensors(f, k), w.tensors(f, h), idf, alpha);
        RMatrix rhs = tensor_map(w.tensors(k, f), w.tensors(h, f), alpha, idf) * eps[index_of(iv, k)];
        if (lhs != rhs) rep.natural_everywhere = false;
      }
    }

  std::vector<char> hex(iv.size() * iv.size(), 0);
  parallel_for(hex.size(), [&](std::size_t x) {
    hex[x] = hexagon_holds(ctx, f, eps, iv[x / iv.size()], iv[x % iv.size()]) ? 1 : 0;
  });
  rep.hexagon = std::all_of(hex.begin(), hex.end(), [](char c) { return c == 1; });
  return rep;
}

// Maps f : F -> G with (id_K o0 f) eps^F(K) = eps^G(K) (f o0 id_K) for all K.
std::size_t center_hom_dim(const CenterWork& w, std::size_t fi, std::size_t gi) {
  const AnContext& ctx = w.ctx;
  const auto& iv = ctx.intervals();
  Interval f = iv[fi], g = iv[gi];
  auto maps = hom_basis(ctx.M(f), ctx.M(g));
  std::vector<std::vector<RMatrix>> equations;
  for (std::size_t t = 0; t < iv.size(); ++t) {
    Interval k = iv[t];
    RMatrix idk = identity_of(ctx.M(k));
    std::vector<RMatrix> eq;
    for (const auto& m : maps)
      eq.push_back(tensor_map(w.tensors(k, f), w.tensors(k, g), idk, m) * w.braidings[fi].maps[t] -
                   w.braidings[gi].maps[t] * tensor_map(w.tensors(f, k), w.tensors(g, k), m, idk));
    equations.push_back(std::move(eq));
  }
  return joint_nullspace(maps.size(), equations).size();
}

}  // namespace

std::vector<SplitDatum> interval_direct_sum_data(const AnContext& ctx, Interval f, Interval g, bool perturb) {
  std::vector<Bimodule<Rational>> parts{ctx.M(f), ctx.M(g)};
  auto sum = direct_sum(parts);
  auto ef = braiding(ctx, f), eg = braiding(ctx, g);
  std::vector<SplitDatum> out;
  for (std::size_t t = 0; t < ctx.intervals().size(); ++t) {
    Interval k = ctx.intervals()[t];
    SplitDatum d = split_datum(sum, parts, ctx.M(k));
    d.theta = direct_sum_theta(d, {ef.maps[t], eg.maps[t]});
    if (perturb && k == Interval{1, ctx.n()}) {
      // A nonzero block from F o K into K o G keeps Theta invertible.
      RMatrix x(d.project_after[1].rows(), d.project_before[0].rows());
      if (x.rows() > 0 && x.cols() > 0) x(0, 0) = Rational(1);
      d.theta = d.theta + d.inject_after[1] * x * d.project_before[0];
    }
    out.push_back(std::move(d));
  }
  return out;
}

CenterReportAn center_An(const AnContext& ctx) {
  CenterWork w(ctx);
  const auto& iv = ctx.intervals();
  CenterReportAn report;
  for (std::size_t fi = 0; fi < iv.size(); ++fi) {
    auto o = center_object(w, fi);
    o.end_dim = center_hom_dim(w, fi, fi);
    report.objects.push_back(o);
  }
  for (std::size_t fi = 0; fi < iv.size(); ++fi)
    for (std::size_t gi = 0; gi < iv.size(); ++gi) {
      CenterHomReportAn h;
      h.f = iv[fi];
      h.g = iv[gi];
      h.hom_dim = hom_basis(ctx.M(h.f), ctx.M(h.g)).size();
      h.center_dim = fi == gi ? report.objects[fi].end_dim : center_hom_dim(w, fi, gi);
      report.homs.push_back(h);
      if (gi < fi) continue;
      SplittingReportAn s;
      s.f = iv[fi];
      s.g = iv[gi];
      s.direct_sum_splits = splitting_check(interval_direct_sum_data(ctx, s.f, s.g, false));
      s.perturbed_splits = splitting_check(interval_direct_sum_data(ctx, s.f, s.g, true));
      report.splittings.push_back(s);
    }
  return report;
}

}  // namespace twocat
