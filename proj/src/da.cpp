#include "twocat/da.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

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

// Looks up indecomposable summands among ideal bimodules by their bigrades,
// then confirms the match with an isomorphism test.
struct IndecomposableIndex {
  std::vector<Ideal> ideals;
  std::vector<Bimodule<Rational>> modules;
  std::map<Support, int> by_support;

  explicit IndecomposableIndex(const AlgebraPtr& a) : ideals(indecomposable_one_morphisms(a)) {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      modules.push_back(ideal_bimodule(ideals[i]));
      by_support.emplace(support_of(modules.back()), static_cast<int>(i));
    }
  }

  int find(const Bimodule<Rational>& m) const {
    auto it = by_support.find(support_of(m));
    if (it == by_support.end()) return -1;
    return is_isomorphic_indecomposable(m, modules[it->second]) ? it->second : -1;
  }

  // Indices of the summands of m, with multiplicity.
  std::vector<int> summands(const Bimodule<Rational>& m, const std::string& what) const {
    std::vector<int> out;
    for (const auto& s : decompose(m)) {
      int k = find(s.module);
      if (k < 0) throw std::logic_error("summand of " + what + " is not an indecomposable ideal bimodule");
      for (int c = 0; c < s.multiplicity; ++c) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

RMatrix unit_iso(const AlgebraPtr& a, const Bimodule<Rational>& unit, const Bimodule<Rational>& k) {
  auto ak = tensor_full(unit, k);
  auto ka = tensor_full(k, unit);
  auto rho_inv = inverse(right_unitor(a, ka, k));
  if (!rho_inv) throw std::logic_error("right unitor is not invertible");
  return *rho_inv * left_unitor(a, ak, k);
}

}  // namespace

std::vector<Ideal> indecomposable_one_morphisms(const AlgebraPtr& a) {
  std::vector<Ideal> out;
  for (const auto& i : enumerate_ideals(a))
    if (!i.is_zero() && is_indecomposable(ideal_bimodule(i))) out.push_back(i);
  return out;
}

CellStructure cells_DA(const AlgebraPtr& a) {
  IndecomposableIndex index(a);
  std::size_t n = index.ideals.size();
  std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(n));
  parallel_for(n * n, [&](std::size_t hf) {
    std::size_t h = hf / n, f = hf % n;
    table[h][f] = index.summands(tensor(index.modules[h], index.modules[f]),
                                 index.ideals[h].str() + " o " + index.ideals[f].str());
  });
  std::vector<std::string> names;
  for (const auto& i : index.ideals) names.push_back(i.str());
  return cell_structure(std::move(names), table);
}

std::vector<SimpleTransitiveDA> classify_simple_transitive_DA(const AlgebraPtr& a) {
  IndecomposableIndex index(a);
  auto family = enumerate_ideals(a);
  std::vector<SimpleTransitiveDA> out;
  for (std::size_t t = 0; t < index.ideals.size(); ++t) {
    const Ideal& i = index.ideals[t];
    if (!is_idempotent(i)) continue;
    SimpleTransitiveDA e;
    e.ideal = i;
    e.morphisms = index.ideals;
    for (std::size_t j = 0; j < index.ideals.size(); ++j) {
      auto parts = index.summands(tensor(index.modules[j], index.modules[t]), index.ideals[j].str() + " o " + i.str());
      int chi = parts == std::vector<int>{static_cast<int>(t)} ? 1 : 0;
      int by_product = ideal_product(index.ideals[j], i) == i ? 1 : 0;
      int by_inclusion = i.subset_of(index.ideals[j]) ? 1 : 0;
      if (chi != by_product || chi != by_inclusion)
        throw std::logic_error("character of " + i.str() + " at " + index.ideals[j].str() +
                               " disagrees: tensor " + std::to_string(chi) + ", product " +
                               std::to_string(by_product) + ", inclusion " + std::to_string(by_inclusion));
      e.character.push_back(chi);
    }
    e.stabilizer = stabilizer(i, family);
    std::vector<Ideal> supersets;
    for (const auto& j : family)
      if (i.subset_of(j)) supersets.push_back(j);
    if (e.stabilizer != supersets) throw std::logic_error("stabilizer of " + i.str() + " is not the set of its supersets");
    out.push_back(std::move(e));
  }
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t y = x + 1; y < out.size(); ++y)
      if (out[x].stabilizer == out[y].stabilizer)
        throw std::logic_error("equal stabilizers for " + out[x].ideal.str() + " and " + out[y].ideal.str());
  return out;
}

Ideal cell_rep_canonical(const Ideal& i) {
  Ideal k = K_of(i);
  auto family = enumerate_ideals(i.algebra());
  if (stabilizer(i, family) != stabilizer(k, family))
    throw std::logic_error("stabilizers of " + i.str() + " and " + k.str() + " differ");
  return k;
}

Matrix<Rational> left_unitor(const AlgebraPtr& a, const TensorProduct<Rational>& tp, const Bimodule<Rational>& m) {
  if (tp.left_dim != static_cast<std::size_t>(a->path_count()) || tp.right_dim != m.dim())
    throw std::invalid_argument("left unitor needs A (x) M");
  RMatrix out(m.dim(), tp.module.dim());
  for (std::size_t b = 0; b < tp.module.dim(); ++b) {
    auto [i, j] = tp.lift[b];
    out.set_col(b, left_path_action(m, a->path(i)).col(j));
  }
  return out;
}

Matrix<Rational> right_unitor(const AlgebraPtr& a, const TensorProduct<Rational>& tp, const Bimodule<Rational>& m) {
  if (tp.right_dim != static_cast<std::size_t>(a->path_count()) || tp.left_dim != m.dim())
    throw std::invalid_argument("right unitor needs M (x) A");
  RMatrix out(m.dim(), tp.module.dim());
  for (std::size_t b = 0; b < tp.module.dim(); ++b) {
    auto [i, j] = tp.lift[b];
    out.set_col(b, right_path_action(m, a->path(j)).col(i));
  }
  return out;
}

bool CenterReportDA::ok() const {
  if (!counterexamples.empty() || unit_end_dim != 1) return false;
  for (const auto& w : witnesses)
    if (!w.bimodules_differ) return false;
  for (const auto& u : unit_scalars)
    if (u.hom_dim != 1 || !u.unique || !u.k || *u.k != 1 || !u.matches_unit) return false;
  return true;
}

CenterReportDA center_DA(const AlgebraPtr& a) {
  CenterReportDA report;
  auto family = enumerate_ideals(a);
  auto inds = indecomposable_one_morphisms(a);
  Ideal unit = Ideal::unit(a);

  // Vertex ideals first: they are the witnesses used in the classical argument.
  std::vector<Ideal> candidates;
  for (int v = 0; v < a->quiver().vertex_count(); ++v) candidates.push_back(Ideal(a, {a->trivial(v)}));
  candidates.insert(candidates.end(), family.begin(), family.end());

  for (const auto& i : inds) {
    if (i == unit) continue;
    bool found = false;
    for (const auto& j : candidates) {
      Ideal ij = ideal_product(i, j), ji = ideal_product(j, i);
      if (ij == ji) continue;
      CenterWitnessDA w{i, j, ij, ji, false};
      auto mi = ideal_bimodule(i), mj = ideal_bimodule(j);
      w.bimodules_differ = !is_isomorphic(tensor(mi, mj), tensor(mj, mi));
      report.witnesses.push_back(std::move(w));
      found = true;
      break;
    }
    if (!found) report.counterexamples.push_back(i);
  }

  // Theta on the identity: Theta(J) = k_J h_J, and naturality along J -> A
  // reads (iota (x) id_A) Theta(J) = id_A (x) iota.
  auto ma = identity_bimodule(a);
  std::vector<Bimodule<Rational>> kmods;
  for (const auto& j : inds) kmods.push_back(ideal_bimodule(j));
  for (std::size_t t = 0; t < inds.size(); ++t) {
    const auto& mj = kmods[t];
    UnitScalarDA u;
    u.ideal = inds[t];
    auto aj = tensor_full(ma, mj), ja = tensor_full(mj, ma), aa = tensor_full(ma, ma);
    auto h = hom_basis(aj.module, ja.module);
    u.hom_dim = h.size();
    auto incl = hom_basis(mj, ma);
    if (h.size() == 1 && incl.size() == 1) {
      auto id_a = RMatrix::identity(ma.dim());
      RMatrix lhs = tensor_map(ja, aa, incl[0], id_a) * h[0];
      RMatrix rhs = tensor_map(aj, aa, id_a, incl[0]);
      // k * lhs = rhs
      std::optional<Rational> k;
      bool consistent = true;
      for (std::size_t r = 0; r < lhs.rows() && consistent; ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c) {
          if (is_zero(lhs(r, c))) {
            if (!is_zero(rhs(r, c))) consistent = false;
            continue;
          }
          Rational v = rhs(r, c) / lhs(r, c);
          if (k && *k != v) {
            consistent = false;
            break;
          }
          k = v;
        }
      if (consistent && k) {
        u.k = k;
        u.unique = true;
        u.matches_unit = h[0].scaled(*k) == unit_iso(a, ma, mj);
      }
    }
    report.unit_scalars.push_back(std::move(u));
  }

  // End((1, e)): f in End(A) with (id_K (x) f) e(K) = e(K) (f (x) id_K).
  auto ends = hom_basis(ma, ma);
  std::vector<std::vector<Rational>> rows;
  for (const auto& mk : kmods) {
    auto ak = tensor_full(ma, mk), ka = tensor_full(mk, ma);
    RMatrix e = unit_iso(a, ma, mk);
    auto id_k = RMatrix::identity(mk.dim());
    std::vector<RMatrix> terms;
    for (const auto& f : ends) terms.push_back(tensor_map(ka, ka, id_k, f) * e - e * tensor_map(ak, ak, f, id_k));
    if (terms.empty()) continue;
    for (std::size_t r = 0; r < terms[0].rows(); ++r)
      for (std::size_t c = 0; c < terms[0].cols(); ++c) {
        std::vector<Rational> row;
        for (const auto& t : terms) row.push_back(t(r, c));
        rows.push_back(std::move(row));
      }
  }
  RMatrix sys(rows.size(), ends.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ends.size(); ++c) sys(r, c) = rows[r][c];
  report.unit_end_dim = nullspace(sys).size();
  return report;
}

std::vector<SplitDatum> unit_direct_sum_data(const AlgebraPtr& a, int copies) {
  if (copies < 1) throw std::invalid_argument("need at least one copy");
  auto ma = identity_bimodule(a);
  std::vector<Bimodule<Rational>> parts(copies, ma);
  auto sum = direct_sum(parts);
  std::vector<SplitDatum> out;
  for (const auto& k : indecomposable_one_morphisms(a)) {
    auto mk = ideal_bimodule(k);
    SplitDatum d = split_datum(sum, parts, mk);
    d.theta = direct_sum_theta(d, std::vector<RMatrix>(copies, unit_iso(a, ma, mk)));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace twocat
