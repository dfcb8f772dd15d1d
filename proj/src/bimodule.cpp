#include "twocat/bimodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twocat {

namespace {

template <class F>
bool same_algebra(const Bimodule<F>& m, const Bimodule<F>& n) {
  if (m.quiver == n.quiver) return m.relation_length == n.relation_length;
  if (!m.quiver || !n.quiver) return false;
  if (m.relation_length != n.relation_length) return false;
  if (m.quiver->vertex_count() != n.quiver->vertex_count()) return false;
  if (m.quiver->arrow_count() != n.quiver->arrow_count()) return false;
  for (int a = 0; a < m.quiver->arrow_count(); ++a)
    if (m.quiver->arrow(a).source != n.quiver->arrow(a).source ||
        m.quiver->arrow(a).target != n.quiver->arrow(a).target)
      return false;
  return true;
}

template <class F>
void require_same_algebra(const Bimodule<F>& m, const Bimodule<F>& n) {
  if (!same_algebra(m, n)) throw std::invalid_argument("bimodules over different algebras");
}

template <class F>
Matrix<F> from_flat(const std::vector<F>& v, std::size_t r, std::size_t c) {
  Matrix<F> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
  return m;
}

// Row-reduced basis of the span of the given matrices (all of one shape).
template <class F>
std::vector<Matrix<F>> span_basis(const std::vector<Matrix<F>>& ms) {
  if (ms.empty()) return {};
  std::size_t r = ms[0].rows(), c = ms[0].cols();
  Matrix<F> rows(ms.size(), r * c);
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t i = 0; i < r * c; ++i) rows(k, i) = ms[k].data()[i];
  Echelon<F> e = row_reduce(rows);
  std::vector<Matrix<F>> out;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    std::vector<F> v(r * c);
    for (std::size_t i = 0; i < r * c; ++i) v[i] = e.rref(k, i);
    out.push_back(from_flat(v, r, c));
  }
  return out;
}

template <class F>
F trace_of_product(const Matrix<F>& a, const Matrix<F>& b) {
  F t(0);
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const F& x = a(k, l);
      if (is_zero(x)) continue;
      const F& y = b(l, k);
      if (!is_zero(y)) t += x * y;
    }
  return t;
}

// ---- root finding used to split minimal polynomials ----

template <class F>
std::vector<F> root_candidates(const Poly<F>& p);

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("100000000")) return out;
  for (mpz_class k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  }
  return out;
}

template <>
std::vector<Rational> root_candidates(const Poly<Rational>& p) {
  std::vector<Rational> out{Rational(0)};
  if (p.degree() < 1) return out;
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) ints.push_back(mpz_class(c * l));
  std::size_t lo = 0;
  while (lo < ints.size() && ints[lo] == 0) ++lo;
  if (lo >= ints.size()) return out;
  for (const auto& num : divisors(ints[lo]))
    for (const auto& den : divisors(ints.back())) {
      Rational r(num, den);
      r.canonicalize();
      out.push_back(r);
      out.push_back(-r);
    }
  return out;
}

template <>
std::vector<Cyclo> root_candidates(const Poly<Cyclo>& p) {
  std::vector<Cyclo> out{Cyclo(0)};
  int d = 0;
  bool rational = true;
  for (const auto& c : p.coeffs()) {
    if (c.conductor()) d = c.conductor();
    if (!c.is_rational()) rational = false;
  }
  if (rational) {
    std::vector<Rational> rc;
    for (const auto& c : p.coeffs()) rc.push_back(c.rational_part());
    for (const auto& r : root_candidates(Poly<Rational>(rc))) out.push_back(Cyclo(r));
  }
  if (d)
    for (int j = 0; j < d; ++j) out.push_back(Cyclo::zeta(d, j));
  return out;
}

// Squarefree factors a_1, a_2, ... with p = c * prod a_i^i (Yun).
template <class F>
std::vector<Poly<F>> squarefree_factors(const Poly<F>& p) {
  std::vector<Poly<F>> out;
  Poly<F> a0 = poly_gcd(p, p.derivative());
  Poly<F> b = Poly<F>::divmod(p, a0).first;
  Poly<F> c = Poly<F>::divmod(p.derivative(), a0).first;
  Poly<F> d = c - b.derivative();
  while (b.degree() > 0) {
    Poly<F> a = poly_gcd(b, d);
    out.push_back(a);
    b = Poly<F>::divmod(b, a).first;
    c = Poly<F>::divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

template <class F>
Poly<F> poly_pow(const Poly<F>& p, int e) {
  Poly<F> r = Poly<F>::constant(F(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

// p = f g with gcd(f, g) = 1 and both of positive degree, when one is found.
template <class F>
std::optional<std::pair<Poly<F>, Poly<F>>> coprime_split(const Poly<F>& p) {
  for (const F& r : root_candidates(p)) {
    if (!is_zero(p(r))) continue;
    Poly<F> f = Poly<F>::constant(F(1)), rest = p;
    Poly<F> lin = Poly<F>::linear_root(r);
    while (true) {
      auto [q, rem] = Poly<F>::divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q;
      f = f * lin;
    }
    if (rest.degree() > 0) return std::make_pair(f, rest);
  }
  auto parts = squarefree_factors(p);
  int nontrivial = 0;
  for (const auto& a : parts)
    if (a.degree() > 0) ++nontrivial;
  if (nontrivial >= 2) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].degree() <= 0) continue;
      Poly<F> f = poly_pow(parts[i], static_cast<int>(i + 1));
      Poly<F> g = Poly<F>::divmod(p, f).first;
      return std::make_pair(f, g);
    }
  }
  return std::nullopt;
}

// Minimal polynomial of y in the quotient C/R, where e is the unit of C.
template <class F>
Poly<F> quotient_minimal_polynomial(const Matrix<F>& y, const Matrix<F>& e, const std::vector<Matrix<F>>& rad,
                                    std::size_t max_degree) {
  std::size_t flat = y.rows() * y.cols();
  std::vector<Matrix<F>> powers{e};
  for (std::size_t deg = 1; deg <= max_degree + 1; ++deg) {
    powers.push_back(powers.back() * y);
    Matrix<F> sys(flat, rad.size() + deg);
    for (std::size_t c = 0; c < rad.size(); ++c)
      for (std::size_t i = 0; i < flat; ++i) sys(i, c) = rad[c].data()[i];
    for (std::size_t c = 0; c < deg; ++c)
      for (std::size_t i = 0; i < flat; ++i) sys(i, rad.size() + c) = powers[c].data()[i];
    auto x = solve(sys, powers[deg].data());
    if (x) {
      std::vector<F> coeffs(deg + 1, F(0));
      for (std::size_t c = 0; c < deg; ++c) coeffs[c] = -(*x)[rad.size() + c];
      coeffs[deg] = F(1);
      return Poly<F>(std::move(coeffs));
    }
  }
  throw std::logic_error("quotient minimal polynomial exceeded the algebra dimension");
}

template <class F>
Matrix<F> evaluate_with_unit(const Poly<F>& p, const Matrix<F>& y, const Matrix<F>& unit) {
  return evaluate(p, y, unit);
}

// A nontrivial idempotent of the corner algebra with unit e, if one exists.
template <class F>
std::optional<Matrix<F>> split_corner(const Matrix<F>& e, const std::vector<Matrix<F>>& corner,
                                      const std::vector<Matrix<F>>& rad, std::size_t lift_bound) {
  std::vector<Matrix<F>> candidates = corner;
  for (std::size_t i = 0; i < corner.size(); ++i)
    for (std::size_t j = i + 1; j < corner.size(); ++j) candidates.push_back(corner[i] + corner[j]);
  for (std::size_t i = 0; i < corner.size(); ++i)
    for (std::size_t j = 0; j < corner.size(); ++j) candidates.push_back(corner[i] * corner[j]);
  for (std::size_t i = 0; i < corner.size(); ++i)
    for (std::size_t j = i + 1; j < corner.size(); ++j)
      candidates.push_back(corner[i] + corner[j].scaled(F(2)));

  std::size_t qdim = corner.size() - rad.size();
  for (const auto& y : candidates) {
    Poly<F> p = quotient_minimal_polynomial(y, e, rad, qdim);
    if (p.degree() < 2) continue;
    auto split = coprime_split(p);
    if (!split) continue;
    auto bz = ext_gcd(split->first, split->second);
    if (bz.g.degree() != 0) continue;
    Poly<F> idem = Poly<F>::divmod(bz.u * split->first, p).second;
    Matrix<F> e0 = evaluate_with_unit(idem, y, e);
    Matrix<F> e1 = lift_idempotent(e0, lift_bound);
    if (e1.is_zero() || e1 == e) continue;
    return e1;
  }
  return std::nullopt;
}

}  // namespace

template <class F>
Matrix<F> Bimodule<F>::left_projector(int v) const {
  Matrix<F> p(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (left_vertex[i] == v) p(i, i) = F(1);
  return p;
}

template <class F>
Matrix<F> Bimodule<F>::right_projector(int v) const {
  Matrix<F> p(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (right_vertex[i] == v) p(i, i) = F(1);
  return p;
}

template <class F>
Bimodule<F> zero_bimodule(std::shared_ptr<const Quiver> q, int relation_length) {
  Bimodule<F> m;
  m.relation_length = relation_length;
  for (int a = 0; a < q->arrow_count(); ++a) {
    m.left.emplace_back(0, 0);
    m.right.emplace_back(0, 0);
  }
  m.quiver = std::move(q);
  return m;
}

template <class F>
std::vector<std::string> validate(const Bimodule<F>& m) {
  std::vector<std::string> bad;
  if (!m.quiver) return {"missing quiver"};
  const Quiver& q = *m.quiver;
  std::size_t n = m.dim();
  if (m.left_vertex.size() != n || m.right_vertex.size() != n) bad.push_back("grading size mismatch");
  if (m.left.size() != static_cast<std::size_t>(q.arrow_count()) ||
      m.right.size() != static_cast<std::size_t>(q.arrow_count()))
    bad.push_back("one action matrix per arrow expected");
  if (!bad.empty()) return bad;
  for (std::size_t i = 0; i < n; ++i)
    if (m.left_vertex[i] < 0 || m.left_vertex[i] >= q.vertex_count() || m.right_vertex[i] < 0 ||
        m.right_vertex[i] >= q.vertex_count())
      bad.push_back("basis vector " + std::to_string(i) + " has an undeclared vertex");
  if (!bad.empty()) return bad;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& L = m.left[a];
    const auto& R = m.right[a];
    int s = q.arrow(a).source, t = q.arrow(a).target;
    if (L.rows() != n || L.cols() != n || R.rows() != n || R.cols() != n) {
      bad.push_back("action matrix of arrow " + q.arrow(a).id + " has the wrong shape");
      continue;
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_zero(L(r, c)) &&
            (m.left_vertex[c] != s || m.left_vertex[r] != t || m.right_vertex[r] != m.right_vertex[c]))
          bad.push_back("left action of " + q.arrow(a).id + " breaks the vertex grading");
        if (!is_zero(R(r, c)) &&
            (m.right_vertex[c] != t || m.right_vertex[r] != s || m.left_vertex[r] != m.left_vertex[c]))
          bad.push_back("right action of " + q.arrow(a).id + " breaks the vertex grading");
      }
  }
  for (int a = 0; a < q.arrow_count(); ++a)
    for (int b = 0; b < q.arrow_count(); ++b)
      if (m.left[a] * m.right[b] != m.right[b] * m.left[a])
        bad.push_back("left action of " + q.arrow(a).id + " does not commute with right action of " +
                      q.arrow(b).id);
  if (m.relation_length > 0) {
    for (const auto& p : enumerate_paths(q, m.relation_length + 1)) {
      if (static_cast<int>(p.length()) != m.relation_length) continue;
      if (!left_path_action(m, p).is_zero() || !right_path_action(m, p).is_zero())
        bad.push_back("relation " + describe(q, p) + " does not act as zero");
    }
  }
  return bad;
}

template <class F>
bool is_bimodule_map(const Bimodule<F>& m, const Bimodule<F>& n, const Matrix<F>& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (std::size_t r = 0; r < n.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (!is_zero(f(r, c)) && (n.left_vertex[r] != m.left_vertex[c] || n.right_vertex[r] != m.right_vertex[c]))
        return false;
  for (std::size_t a = 0; a < m.left.size(); ++a) {
    if (f * m.left[a] != n.left[a] * f) return false;
    if (f * m.right[a] != n.right[a] * f) return false;
  }
  return true;
}

template <class F>
Matrix<F> left_path_action(const Bimodule<F>& m, const Path& b) {
  Matrix<F> acc = m.left_projector(b.source);
  for (std::size_t i = b.arrows.size(); i-- > 0;) acc = m.left[b.arrows[i]] * acc;
  return acc;
}

template <class F>
Matrix<F> right_path_action(const Bimodule<F>& m, const Path& b) {
  // m.(a_m ... a_1) = ((m.a_m) ...).a_1
  Matrix<F> acc = m.right_projector(b.target);
  for (std::size_t i = 0; i < b.arrows.size(); ++i) acc = m.right[b.arrows[i]] * acc;
  return acc;
}

template <class F>
DirectSum<F> direct_sum(const std::vector<Bimodule<F>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  for (const auto& p : parts) require_same_algebra(parts[0], p);
  DirectSum<F> out;
  Bimodule<F>& s = out.module;
  s.quiver = parts[0].quiver;
  s.relation_length = parts[0].relation_length;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  std::size_t na = parts[0].left.size();
  s.left.assign(na, Matrix<F>(total, total));
  s.right.assign(na, Matrix<F>(total, total));
  std::size_t off = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (std::size_t i = 0; i < p.dim(); ++i) {
      s.labels.push_back(p.labels[i] + "#" + std::to_string(k + 1));
      s.left_vertex.push_back(p.left_vertex[i]);
      s.right_vertex.push_back(p.right_vertex[i]);
    }
    for (std::size_t a = 0; a < na; ++a) {
      s.left[a].set_block(off, off, p.left[a]);
      s.right[a].set_block(off, off, p.right[a]);
    }
    Matrix<F> inj(total, p.dim()), proj(p.dim(), total);
    for (std::size_t i = 0; i < p.dim(); ++i) {
      inj(off + i, i) = F(1);
      proj(i, off + i) = F(1);
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
    off += p.dim();
  }
  return out;
}

template <class F>
std::pair<Bimodule<F>, Matrix<F>> submodule(const Bimodule<F>& m, const std::vector<std::vector<F>>& vectors) {
  std::size_t r = vectors.size();
  Matrix<F> b(m.dim(), r);
  for (std::size_t k = 0; k < r; ++k) b.set_col(k, vectors[k]);
  // Rows of b where it is invertible give coordinates.
  Echelon<F> e = row_reduce(b.transpose());
  if (e.rank() != r) throw std::invalid_argument("submodule vectors are dependent");
  Matrix<F> sel(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t c = 0; c < r; ++c) sel(k, c) = b(e.pivots[k], c);
  auto sel_inv = inverse(sel);
  auto coords = [&](const std::vector<F>& w) {
    std::vector<F> picked(r);
    for (std::size_t k = 0; k < r; ++k) picked[k] = w[e.pivots[k]];
    std::vector<F> x = (*sel_inv) * picked;
    if (b * x != w) throw std::invalid_argument("vectors do not span a sub-bimodule");
    return x;
  };
  Bimodule<F> s;
  s.quiver = m.quiver;
  s.relation_length = m.relation_length;
  for (std::size_t k = 0; k < r; ++k) {
    int lead = -1, units = 0;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (!is_zero(vectors[k][i])) {
        if (lead < 0) lead = static_cast<int>(i);
        ++units;
      }
    if (lead < 0) throw std::invalid_argument("zero vector in submodule basis");
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (!is_zero(vectors[k][i]) &&
          (m.left_vertex[i] != m.left_vertex[lead] || m.right_vertex[i] != m.right_vertex[lead]))
        throw std::invalid_argument("submodule basis vector is not homogeneous");
    bool plain = units == 1 && vectors[k][lead] == F(1);
    s.labels.push_back(plain ? m.labels[lead] : "v" + std::to_string(k + 1));
    s.left_vertex.push_back(m.left_vertex[lead]);
    s.right_vertex.push_back(m.right_vertex[lead]);
  }
  for (std::size_t a = 0; a < m.left.size(); ++a) {
    Matrix<F> L(r, r), R(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      L.set_col(k, coords(m.left[a] * vectors[k]));
      R.set_col(k, coords(m.right[a] * vectors[k]));
    }
    s.left.push_back(std::move(L));
    s.right.push_back(std::move(R));
  }
  return {std::move(s), std::move(b)};
}

template <class F>
Bimodule<F> change_basis(const Bimodule<F>& m, const Matrix<F>& p) {
  std::vector<std::vector<F>> cols;
  for (std::size_t j = 0; j < p.cols(); ++j) cols.push_back(p.col(j));
  if (p.rows() != m.dim() || p.cols() != m.dim()) throw std::invalid_argument("change of basis must be square");
  return submodule(m, cols).first;
}

template <class F>
const std::vector<std::pair<int, F>>& TensorProduct<F>::project(int i, int j) const {
  static const std::vector<std::pair<int, F>> empty;
  int f = formal_of.at(static_cast<std::size_t>(i) * right_dim + j);
  return f < 0 ? empty : reduce[f];
}

template <class F>
TensorProduct<F> tensor_full(const Bimodule<F>& m, const Bimodule<F>& n) {
  require_same_algebra(m, n);
  const Quiver& q = *m.quiver;
  TensorProduct<F> tp;
  tp.left_dim = m.dim();
  tp.right_dim = n.dim();
  tp.formal_of.assign(m.dim() * n.dim(), -1);
  std::vector<std::pair<int, int>> formal;
  // Formal pairs grouped by bigrade (left vertex of m_i, right vertex of n_j).
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      if (m.right_vertex[i] != n.left_vertex[j]) continue;
      int f = static_cast<int>(formal.size());
      tp.formal_of[i * n.dim() + j] = f;
      formal.push_back({static_cast<int>(i), static_cast<int>(j)});
      blocks[{m.left_vertex[i], n.right_vertex[j]}].push_back(f);
    }
  // Balancing relations m.a (x) n - m (x) a.n, collected per bigrade.
  std::map<std::pair<int, int>, std::vector<std::map<int, F>>> relations;
  for (int a = 0; a < q.arrow_count(); ++a) {
    int s = q.arrow(a).source, t = q.arrow(a).target;
    const auto& R = m.right[a];
    const auto& L = n.left[a];
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (m.right_vertex[i] != t) continue;
      for (std::size_t j = 0; j < n.dim(); ++j) {
        if (n.left_vertex[j] != s) continue;
        std::map<int, F> rel;
        for (std::size_t p = 0; p < m.dim(); ++p)
          if (!is_zero(R(p, i))) rel[tp.formal_of[p * n.dim() + j]] += R(p, i);
        for (std::size_t qq = 0; qq < n.dim(); ++qq)
          if (!is_zero(L(qq, j))) rel[tp.formal_of[i * n.dim() + qq]] -= L(qq, j);
        for (auto it = rel.begin(); it != rel.end();) it = is_zero(it->second) ? rel.erase(it) : std::next(it);
        if (rel.empty()) continue;
        if (rel.begin()->first < 0) throw std::logic_error("relation left the balanced span");
        relations[{m.left_vertex[i], n.right_vertex[j]}].push_back(std::move(rel));
      }
    }
  }
  tp.reduce.assign(formal.size(), {});
  std::vector<int> basis_formal;
  std::vector<std::pair<int, int>> basis_grade;
  for (const auto& [grade, members] : blocks) {
    // Columns in reverse formal order so that early pairs survive as basis vectors.
    std::vector<int> cols(members.rbegin(), members.rend());
    std::map<int, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
    const auto& rels = relations[grade];
    Matrix<F> sys(rels.size(), cols.size());
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (const auto& [f, v] : rels[r]) sys(r, col_of.at(f)) = v;
    Echelon<F> e = row_reduce(sys);
    std::vector<char> pivot(cols.size(), 0);
    for (auto p : e.pivots) pivot[p] = 1;
    std::map<std::size_t, int> basis_index;
    // basis vectors in increasing formal order
    for (std::size_t c = cols.size(); c-- > 0;) {
      if (pivot[c]) continue;
      basis_index[c] = static_cast<int>(basis_formal.size());
      basis_formal.push_back(cols[c]);
      basis_grade.push_back(grade);
      tp.reduce[cols[c]] = {{basis_index[c], F(1)}};
    }
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::vector<std::pair<int, F>> v;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!pivot[c] && !is_zero(e.rref(r, c))) v.push_back({basis_index.at(c), -e.rref(r, c)});
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      tp.reduce[cols[e.pivots[r]]] = std::move(v);
    }
  }
  Bimodule<F>& t = tp.module;
  t.quiver = m.quiver;
  t.relation_length = m.relation_length;
  std::size_t dim = basis_formal.size();
  for (std::size_t b = 0; b < dim; ++b) {
    auto [i, j] = formal[basis_formal[b]];
    tp.lift.push_back({i, j});
    t.labels.push_back(m.labels[i] + "⊗" + n.labels[j]);
    t.left_vertex.push_back(basis_grade[b].first);
    t.right_vertex.push_back(basis_grade[b].second);
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    Matrix<F> L(dim, dim), R(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      auto [i, j] = tp.lift[b];
      for (std::size_t p = 0; p < m.dim(); ++p) {
        const F& x = m.left[a](p, i);
        if (is_zero(x)) continue;
        for (const auto& [k, v] : tp.project(static_cast<int>(p), j)) L(k, b) += x * v;
      }
      for (std::size_t qq = 0; qq < n.dim(); ++qq) {
        const F& x = n.right[a](qq, j);
        if (is_zero(x)) continue;
        for (const auto& [k, v] : tp.project(i, static_cast<int>(qq))) R(k, b) += x * v;
      }
    }
    t.left.push_back(std::move(L));
    t.right.push_back(std::move(R));
  }
  return tp;
}

template <class F>
Matrix<F> tensor_map(const TensorProduct<F>& src, const TensorProduct<F>& dst, const Matrix<F>& f,
                     const Matrix<F>& g) {
  if (f.cols() != src.left_dim || g.cols() != src.right_dim || f.rows() != dst.left_dim ||
      g.rows() != dst.right_dim)
    throw std::invalid_argument("tensor_map: shape mismatch");
  Matrix<F> out(dst.module.dim(), src.module.dim());
  for (std::size_t b = 0; b < src.module.dim(); ++b) {
    auto [i, j] = src.lift[b];
    for (std::size_t p = 0; p < f.rows(); ++p) {
      const F& x = f(p, i);
      if (is_zero(x)) continue;
      for (std::size_t qq = 0; qq < g.rows(); ++qq) {
        const F& y = g(qq, j);
        if (is_zero(y)) continue;
        F xy = x * y;
        for (const auto& [k, v] : dst.project(static_cast<int>(p), static_cast<int>(qq))) out(k, b) += xy * v;
      }
    }
  }
  return out;
}

template <class F>
Matrix<F> associator(const TensorProduct<F>& ab, const TensorProduct<F>& ab_c, const TensorProduct<F>& bc,
                     const TensorProduct<F>& a_bc) {
  Matrix<F> out(a_bc.module.dim(), ab_c.module.dim());
  for (std::size_t b = 0; b < ab_c.module.dim(); ++b) {
    auto [t, c] = ab_c.lift[b];
    auto [x, y] = ab.lift[t];
    for (const auto& [r, v] : bc.project(y, c))
      for (const auto& [k, w] : a_bc.project(x, r)) out(k, b) += v * w;
  }
  return out;
}

template <class F>
std::vector<Matrix<F>> hom_basis(const Bimodule<F>& m, const Bimodule<F>& n) {
  require_same_algebra(m, n);
  std::size_t dm = m.dim(), dn = n.dim();
  std::vector<int> var(dn * dm, -1);
  std::vector<std::pair<int, int>> var_pos;
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t c = 0; c < dm; ++c)
      if (n.left_vertex[r] == m.left_vertex[c] && n.right_vertex[r] == m.right_vertex[c]) {
        var[r * dm + c] = static_cast<int>(var_pos.size());
        var_pos.push_back({static_cast<int>(r), static_cast<int>(c)});
      }
  std::size_t u = var_pos.size();
  if (u == 0) return {};
  // f X_M - X_N f = 0 for every action matrix X, entry by entry.
  std::map<long, std::map<int, F>> eqs;
  long block = static_cast<long>(dn * dm);
  long eq_base = 0;
  auto add_constraints = [&](const Matrix<F>& xm, const Matrix<F>& xn) {
    for (std::size_t t = 0; t < dm; ++t)
      for (std::size_t c = 0; c < dm; ++c) {
        const F& v = xm(t, c);
        if (is_zero(v)) continue;
        for (std::size_t r = 0; r < dn; ++r) {
          int x = var[r * dm + t];
          if (x >= 0) eqs[eq_base + static_cast<long>(r * dm + c)][x] += v;
        }
      }
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t t = 0; t < dn; ++t) {
        const F& v = xn(r, t);
        if (is_zero(v)) continue;
        for (std::size_t c = 0; c < dm; ++c) {
          int x = var[t * dm + c];
          if (x >= 0) eqs[eq_base + static_cast<long>(r * dm + c)][x] -= v;
        }
      }
    eq_base += block;
  };
  for (std::size_t a = 0; a < m.left.size(); ++a) {
    add_constraints(m.left[a], n.left[a]);
    add_constraints(m.right[a], n.right[a]);
  }
  std::vector<const std::map<int, F>*> rows;
  for (const auto& [id, row] : eqs) {
    bool nonzero = false;
    for (const auto& [x, v] : row)
      if (!is_zero(v)) nonzero = true;
    if (nonzero) rows.push_back(&row);
  }
  Matrix<F> sys(rows.size(), u);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [x, v] : *rows[i]) sys(i, x) = v;
  std::vector<Matrix<F>> out;
  for (const auto& sol : nullspace(sys)) {
    Matrix<F> f(dn, dm);
    for (std::size_t x = 0; x < u; ++x) f(var_pos[x].first, var_pos[x].second) = sol[x];
    out.push_back(std::move(f));
  }
  return out;
}

template <class F>
std::vector<Matrix<F>> trace_radical(const std::vector<Matrix<F>>& algebra) {
  std::size_t k = algebra.size();
  if (k == 0) return {};
  Matrix<F> form(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      F v = trace_of_product(algebra[i], algebra[j]);
      form(i, j) = v;
      form(j, i) = v;
    }
  std::vector<Matrix<F>> rad;
  for (const auto& x : nullspace(form)) {
    Matrix<F> r(algebra[0].rows(), algebra[0].cols());
    for (std::size_t i = 0; i < k; ++i)
      if (!is_zero(x[i])) r += algebra[i].scaled(x[i]);
    rad.push_back(std::move(r));
  }
  return span_basis(rad);
}

template <class F>
Matrix<F> lift_idempotent(Matrix<F> e, std::size_t bound) {
  for (std::size_t round = 0; round <= bound; ++round) {
    Matrix<F> e2 = e * e;
    if (e2 == e) return e;
    Matrix<F> e3 = e2 * e;
    e = e2.scaled(F(3)) - e3.scaled(F(2));
  }
  throw std::logic_error("idempotent lifting did not stabilize within the nilpotency bound");
}

template <class F>
EndAlgebra<F> end_algebra(const Bimodule<F>& m) {
  EndAlgebra<F> out;
  out.basis = hom_basis(m, m);
  if (m.dim() == 0) return out;
  out.radical = trace_radical(out.basis);
  for (const auto& r : out.radical) {
    // nilpotency sanity: r^dim = 0
    if (!power(r, static_cast<long>(m.dim())).is_zero())
      throw std::logic_error("trace-form radical contains a non-nilpotent element");
  }
  std::size_t bound = out.basis.size() + 1;
  std::vector<Matrix<F>> pending{Matrix<F>::identity(m.dim())};
  while (!pending.empty()) {
    Matrix<F> e = pending.back();
    pending.pop_back();
    std::vector<Matrix<F>> corner_gen;
    for (const auto& b : out.basis) corner_gen.push_back(e * b * e);
    std::vector<Matrix<F>> corner = span_basis(corner_gen);
    std::vector<Matrix<F>> rad = trace_radical(corner);
    if (corner.size() - rad.size() == 1) {
      out.idempotents.push_back(e);
      continue;
    }
    auto e1 = split_corner(e, corner, rad, bound);
    if (!e1) throw std::runtime_error("could not split a corner algebra with non-local quotient");
    pending.push_back(e - *e1);
    pending.push_back(*e1);
  }
  return out;
}

template <class F>
std::vector<Summand<F>> decompose(const Bimodule<F>& m) {
  std::vector<Summand<F>> out;
  if (m.dim() == 0) return out;
  EndAlgebra<F> end = end_algebra(m);
  for (const auto& e : end.idempotents) {
    std::map<std::pair<int, int>, std::vector<std::size_t>> grades;
    for (std::size_t i = 0; i < m.dim(); ++i) grades[{m.left_vertex[i], m.right_vertex[i]}].push_back(i);
    std::vector<std::vector<F>> vecs;
    for (const auto& [g, idx] : grades) {
      Matrix<F> cols(idx.size(), m.dim());
      for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t r = 0; r < m.dim(); ++r) cols(k, r) = e(r, idx[k]);
      Echelon<F> ech = row_reduce(cols);
      for (std::size_t k = 0; k < ech.rank(); ++k) {
        std::vector<F> v(m.dim());
        for (std::size_t r = 0; r < m.dim(); ++r) v[r] = ech.rref(k, r);
        vecs.push_back(std::move(v));
      }
    }
    auto [sub, inc] = submodule(m, vecs);
    bool placed = false;
    for (auto& s : out) {
      if (is_isomorphic_indecomposable(s.module, sub)) {
        ++s.multiplicity;
        s.inclusions.push_back(inc);
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({std::move(sub), 1, {std::move(inc)}});
  }
  return out;
}

template <class F>
bool is_indecomposable(const Bimodule<F>& m) {
  if (m.dim() == 0) return false;
  return end_algebra(m).idempotents.size() == 1;
}

template <class F>
std::optional<bool> has_invertible_combination(const std::vector<Matrix<F>>& maps, std::size_t budget) {
  if (maps.empty()) return false;
  std::size_t n = maps[0].rows();
  if (!maps[0].square()) return false;
  if (n == 0) return true;
  std::size_t h = maps.size();
  long side = static_cast<long>(n) + 1;  // grid {0..n}: larger than the degree n
  auto det_at = [&](const std::vector<long>& lambda) {
    Matrix<F> s(n, n);
    for (std::size_t i = 0; i < h; ++i)
      if (lambda[i]) s += maps[i].scaled(F(lambda[i]));
    return !is_zero(determinant(s));
  };
  // A few spread-out points first; they settle the common case at once.
  for (long t = 0; t < 8; ++t) {
    std::vector<long> lambda(h);
    for (std::size_t i = 0; i < h; ++i) lambda[i] = 1 + (static_cast<long>(i) * 7 + t * 13 + t * t) % side;
    if (det_at(lambda)) return true;
  }
  double grid = 1;
  for (std::size_t i = 0; i < h; ++i) grid *= static_cast<double>(side);
  bool exhaustive = grid <= static_cast<double>(budget);
  std::vector<long> lambda(h, 0);
  std::size_t tried = 0;
  while (true) {
    if (det_at(lambda)) return true;
    if (!exhaustive && ++tried >= budget) return std::nullopt;
    std::size_t i = 0;
    while (i < h && ++lambda[i] == side) lambda[i++] = 0;
    if (i == h) break;
  }
  return false;
}

template <class F>
bool is_isomorphic_indecomposable(const Bimodule<F>& m, const Bimodule<F>& n) {
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  auto fs = hom_basis(m, n);
  if (fs.empty()) return false;
  auto gs = hom_basis(n, m);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (is_invertible(Matrix<F>(g * f))) return true;
  return false;
}

template <class F>
bool is_isomorphic(const Bimodule<F>& m, const Bimodule<F>& n) {
  require_same_algebra(m, n);
  if (m.dim() != n.dim()) return false;
  std::map<std::pair<int, int>, int> grades;
  for (std::size_t i = 0; i < m.dim(); ++i) ++grades[{m.left_vertex[i], m.right_vertex[i]}];
  for (std::size_t i = 0; i < n.dim(); ++i) --grades[{n.left_vertex[i], n.right_vertex[i]}];
  for (const auto& [g, c] : grades)
    if (c) return false;
  if (m.dim() == 0) return true;
  auto fs = hom_basis(m, n);
  auto verdict = has_invertible_combination(fs);
  if (verdict) return *verdict;
  // Grid too large to exhaust: compare Krull-Schmidt decompositions instead.
  auto dm = decompose(m), dn = decompose(n);
  if (dm.size() != dn.size()) return false;
  std::vector<char> used(dn.size(), 0);
  for (const auto& s : dm) {
    bool matched = false;
    for (std::size_t k = 0; k < dn.size(); ++k) {
      if (used[k] || dn[k].multiplicity != s.multiplicity) continue;
      if (is_isomorphic_indecomposable(s.module, dn[k].module)) {
        used[k] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

#define TWOCAT_INSTANTIATE(F)                                                                              \
  template struct Bimodule<F>;                                                                             \
  template Bimodule<F> zero_bimodule(std::shared_ptr<const Quiver>, int);                                  \
  template std::vector<std::string> validate(const Bimodule<F>&);                                          \
  template bool is_bimodule_map(const Bimodule<F>&, const Bimodule<F>&, const Matrix<F>&);                 \
  template Matrix<F> left_path_action(const Bimodule<F>&, const Path&);                                    \
  template Matrix<F> right_path_action(const Bimodule<F>&, const Path&);                                   \
  template DirectSum<F> direct_sum(const std::vector<Bimodule<F>>&);                                       \
  template std::pair<Bimodule<F>, Matrix<F>> submodule(const Bimodule<F>&,                                 \
                                                       const std::vector<std::vector<F>>&);                \
  template Bimodule<F> change_basis(const Bimodule<F>&, const Matrix<F>&);                                 \
  template struct TensorProduct<F>;                                                                        \
  template TensorProduct<F> tensor_full(const Bimodule<F>&, const Bimodule<F>&);                           \
  template Matrix<F> tensor_map(const TensorProduct<F>&, const TensorProduct<F>&, const Matrix<F>&,        \
                                const Matrix<F>&);                                                         \
  template Matrix<F> associator(const TensorProduct<F>&, const TensorProduct<F>&, const TensorProduct<F>&, \
                                const TensorProduct<F>&);                                                  \
  template std::vector<Matrix<F>> hom_basis(const Bimodule<F>&, const Bimodule<F>&);                       \
  template std::vector<Matrix<F>> trace_radical(const std::vector<Matrix<F>>&);                            \
  template Matrix<F> lift_idempotent(Matrix<F>, std::size_t);                                              \
  template EndAlgebra<F> end_algebra(const Bimodule<F>&);                                                  \
  template std::vector<Summand<F>> decompose(const Bimodule<F>&);                                          \
  template bool is_indecomposable(const Bimodule<F>&);                                                     \
  template std::optional<bool> has_invertible_combination(const std::vector<Matrix<F>>&, std::size_t);     \
  template bool is_isomorphic(const Bimodule<F>&, const Bimodule<F>&);                                     \
  template bool is_isomorphic_indecomposable(const Bimodule<F>&, const Bimodule<F>&);

TWOCAT_INSTANTIATE(Rational)
TWOCAT_INSTANTIATE(Cyclo)

}  // namespace twocat
