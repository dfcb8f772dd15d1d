#include "twocat/trunc.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace twocat {

namespace {

CMatrix power_of_d(const TruncParams& t, long s) {
  std::vector<Cyclo> z;
  for (int m = 0; m < t.k; ++m) z.push_back(t.zeta(s * m));
  return CMatrix::diagonal(z);
}

std::vector<Cyclo> unit_vector(int k, int at) {
  std::vector<Cyclo> v(k, Cyclo(0));
  v[at] = Cyclo(1);
  return v;
}

// Nullspace of c -> sum_u c_u terms[u].
std::vector<std::vector<Cyclo>> solutions(const std::vector<CMatrix>& terms) {
  if (terms.empty()) return {};
  std::size_t r = terms[0].rows(), c = terms[0].cols();
  CMatrix sys(r * c, terms.size());
  for (std::size_t u = 0; u < terms.size(); ++u)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) sys(i * c + j, u) = terms[u](i, j);
  return nullspace(sys);
}

CMatrix block_diagonal(const std::vector<CMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  CMatrix out(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    out.set_block(at, at, b);
    at += b.rows();
  }
  return out;
}

void check_vector(const TruncParams& t, const std::vector<Cyclo>& a) {
  if (static_cast<int>(a.size()) != t.k) throw std::invalid_argument("vector must have length k = " + std::to_string(t.k));
  if (a[0] != Cyclo(1)) throw std::invalid_argument("leading entry must be 1");
}

std::string coefficient_prefix(const Cyclo& c) {
  if (c == Cyclo(1)) return "";
  if (c == Cyclo(-1)) return "-";
  if (c.is_rational()) return c.str() + "*";
  return "(" + c.str() + ")*";
}

std::shared_ptr<const Quiver> loop_quiver() {
  static const auto q = std::make_shared<const Quiver>(Quiver::loop());
  return q;
}

}  // namespace

TruncParams::TruncParams(int k_, int d_) : k(k_), d(d_) {
  if (k < 2 || d < 2) throw std::invalid_argument("need k >= 2 and d >= 2");
}

std::vector<Cyclo> TruncParams::zeta_vector() const {
  std::vector<Cyclo> z;
  for (int m = 0; m < k; ++m) z.push_back(zeta(m));
  return z;
}

TruncMorphism TruncMorphism::zero(const TruncParams& t, long i, long j) {
  TruncMorphism f;
  f.source = t.index(i);
  f.target = t.index(j);
  f.coeffs.assign(f.source == f.target ? t.k : 1, Cyclo(0));
  return f;
}

TruncMorphism TruncMorphism::identity(const TruncParams& t, long i) { return q(t, i, 0); }

TruncMorphism TruncMorphism::q(const TruncParams& t, long i, int power) {
  if (power < 0) throw std::invalid_argument("negative power of q");
  TruncMorphism f = zero(t, i, i);
  if (power < t.k) f.coeffs[power] = Cyclo(1);
  return f;
}

TruncMorphism TruncMorphism::p(const TruncParams& t, long i, long j) {
  if (t.index(i) == t.index(j)) throw std::invalid_argument("p_ij needs i and j distinct mod d");
  TruncMorphism f = zero(t, i, j);
  f.coeffs[0] = Cyclo(1);
  return f;
}

bool TruncMorphism::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclo& c) { return c.is_zero(); });
}

TruncMorphism TruncMorphism::operator+(const TruncMorphism& o) const {
  if (source != o.source || target != o.target || coeffs.size() != o.coeffs.size())
    throw std::invalid_argument("adding 2-morphisms between different 1-morphisms");
  TruncMorphism r = *this;
  for (std::size_t t = 0; t < coeffs.size(); ++t) r.coeffs[t] += o.coeffs[t];
  return r;
}

TruncMorphism TruncMorphism::scaled(const Cyclo& c) const {
  TruncMorphism r = *this;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

bool TruncMorphism::operator==(const TruncMorphism& o) const {
  return source == o.source && target == o.target && coeffs == o.coeffs;
}

std::string TruncMorphism::str() const {
  std::string out;
  auto add = [&](const Cyclo& c, const std::string& gen) {
    if (c.is_zero()) return;
    std::string term = coefficient_prefix(c) + gen;
    if (term.front() == '-' && !out.empty()) {
      out += " - " + term.substr(1);
      return;
    }
    out += out.empty() ? term : " + " + term;
  };
  if (is_endo()) {
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      std::string s = std::to_string(source);
      add(coeffs[t], t == 0 ? "id_" + s : "q_" + s + (t > 1 ? "^" + std::to_string(t) : ""));
    }
  } else {
    add(coeffs[0], "p_{" + std::to_string(source) + "," + std::to_string(target) + "}");
  }
  return out.empty() ? "0" : out;
}

CMatrix toeplitz(const std::vector<Cyclo>& b) {
  std::size_t k = b.size();
  CMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = r; c < k; ++c) m(r, c) = b[c - r];
  return m;
}

CMatrix row_matrix(const TruncParams& t, const TruncMorphism& f) {
  if (f.is_endo()) {
    if (static_cast<int>(f.coeffs.size()) != t.k) throw std::invalid_argument("endomorphism needs k coefficients");
    return toeplitz(f.coeffs);
  }
  if (f.coeffs.size() != 1) throw std::invalid_argument("p-multiple needs one coefficient");
  CMatrix m(t.k, t.k);
  m(0, t.k - 1) = f.coeffs[0];
  return m;
}

TruncMorphism from_row_matrix(const TruncParams& t, int source, int target, const CMatrix& m) {
  if (static_cast<int>(m.rows()) != t.k || static_cast<int>(m.cols()) != t.k)
    throw std::invalid_argument("matrix must be k x k");
  TruncMorphism f = TruncMorphism::zero(t, source, target);
  if (f.is_endo()) {
    for (int c = 0; c < t.k; ++c) f.coeffs[c] = m(0, c);
  } else {
    f.coeffs[0] = m(0, t.k - 1);
  }
  if (row_matrix(t, f) != m)
    throw std::invalid_argument("matrix is not a bimodule map F_" + std::to_string(f.source) + " -> F_" +
                                std::to_string(f.target));
  return f;
}

TruncMorphism vertical(const TruncParams& t, const TruncMorphism& g, const TruncMorphism& f) {
  if (f.target != g.source) throw std::invalid_argument("vertical composition of non-composable 2-morphisms");
  return from_row_matrix(t, f.source, g.target, row_matrix(t, f) * row_matrix(t, g));
}

TruncMorphism whisker_left(const TruncParams& t, long l, const TruncMorphism& g) {
  TruncMorphism r = g;
  r.source = t.index(g.source + l);
  r.target = t.index(g.target + l);
  return r;
}

TruncMorphism whisker_right(const TruncParams& t, const TruncMorphism& f, long l) {
  TruncMorphism r = whisker_left(t, l, f);
  if (f.is_endo()) {
    for (int s = 0; s < t.k; ++s) r.coeffs[s] *= t.zeta(l * s);
  } else {
    r.coeffs[0] *= t.zeta(l * (t.k - 1));
  }
  return r;
}

TruncMorphism horizontal(const TruncParams& t, const TruncMorphism& f, const TruncMorphism& g) {
  return vertical(t, whisker_left(t, f.target, g), whisker_right(t, f, g.source));
}

Bimodule<Cyclo> twisted_D(const TruncParams& t, long i) {
  Bimodule<Cyclo> m;
  m.quiver = loop_quiver();
  m.relation_length = t.k;
  for (int s = 0; s < t.k; ++s) {
    m.labels.push_back(s == 0 ? "1" : s == 1 ? "x" : "x^" + std::to_string(s));
    m.left_vertex.push_back(0);
    m.right_vertex.push_back(0);
  }
  CMatrix left(t.k, t.k), right(t.k, t.k);
  Cyclo z = t.zeta(i);
  for (int s = 0; s + 1 < t.k; ++s) {
    left(s + 1, s) = z;
    right(s + 1, s) = Cyclo(1);
  }
  m.left.push_back(left);
  m.right.push_back(right);
  return m;
}

HomTrunc hom_trunc(const TruncParams& t, long i, long j) {
  HomTrunc h;
  h.source = t.index(i);
  h.target = t.index(j);
  if (h.source == h.target) {
    for (int s = 0; s < t.k; ++s) h.basis.push_back(TruncMorphism::q(t, i, s));
  } else {
    h.basis.push_back(TruncMorphism::p(t, i, j));
  }
  auto src = twisted_D(t, i), dst = twisted_D(t, j);
  h.engine_dim = hom_basis(src, dst).size();
  h.engine_agrees = h.engine_dim == h.basis.size();
  for (const auto& f : h.basis)
    if (!is_bimodule_map(src, dst, row_matrix(t, f).transpose())) h.engine_agrees = false;
  return h;
}

namespace {

// F_j (x) F_i with its normalised isomorphism onto F_{i+j}.
struct TwistedTensor {
  TensorProduct<Cyclo> tp;
  CMatrix to_sum, from_sum;  // column convention
};

TwistedTensor twisted_tensor(const TruncParams& t, int j, int i) {
  TwistedTensor out;
  out.tp = tensor_full(twisted_D(t, j), twisted_D(t, i));
  auto target = twisted_D(t, i + j);
  auto maps = hom_basis(out.tp.module, target);
  std::vector<Cyclo> x(out.tp.module.dim(), Cyclo(0));
  for (const auto& [b, c] : out.tp.project(0, 0)) x[b] += c;
  CMatrix images(t.k, maps.size());
  for (std::size_t u = 0; u < maps.size(); ++u) images.set_col(u, maps[u] * x);
  auto c = solve(images, unit_vector(t.k, 0));
  if (!c) throw std::logic_error("no bimodule map sends 1 (x) 1 to 1");
  out.to_sum = CMatrix(t.k, out.tp.module.dim());
  for (std::size_t u = 0; u < maps.size(); ++u) out.to_sum = out.to_sum + maps[u].scaled((*c)[u]);
  auto inv = inverse(out.to_sum);
  if (!inv) throw std::logic_error("F_j o F_i is not isomorphic to F_{i+j}");
  out.from_sum = *inv;
  return out;
}

class TwistedTensorCache {
 public:
  explicit TwistedTensorCache(const TruncParams& t) : t_(t) {}
  const TwistedTensor& operator()(int j, int i) {
    auto key = std::make_pair(t_.index(j), t_.index(i));
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, twisted_tensor(t_, key.first, key.second)).first;
    return it->second;
  }

 private:
  TruncParams t_;
  std::map<std::pair<int, int>, TwistedTensor> cache_;
};

CMatrix horizontal_by_tensor(const TruncParams& t, TwistedTensorCache& cache, const TruncMorphism& f,
                             const TruncMorphism& g) {
  const auto& src = cache(f.source, g.source);
  const auto& dst = cache(f.target, g.target);
  CMatrix m = tensor_map(src.tp, dst.tp, row_matrix(t, f).transpose(), row_matrix(t, g).transpose());
  return (dst.to_sum * m * src.from_sum).transpose();
}

}  // namespace

CMatrix horizontal_by_tensor(const TruncParams& t, const TruncMorphism& f, const TruncMorphism& g) {
  TwistedTensorCache cache(t);
  return horizontal_by_tensor(t, cache, f, g);
}

std::vector<TruncMorphism> generators(const TruncParams& t) {
  std::vector<TruncMorphism> out;
  for (int i = 0; i < t.d; ++i)
    for (int s = 0; s < t.k; ++s) out.push_back(TruncMorphism::q(t, i, s));
  for (int i = 0; i < t.d; ++i)
    for (int j = 0; j < t.d; ++j)
      if (i != j) out.push_back(TruncMorphism::p(t, i, j));
  return out;
}

HorizontalOracleReport horizontal_oracle(const TruncParams& t) {
  HorizontalOracleReport rep;
  rep.k = t.k;
  rep.d = t.d;
  TwistedTensorCache cache(t);
  auto check = [&](const std::string& what, const TruncMorphism& closed, const TruncMorphism& f,
                   const TruncMorphism& g) {
    ++rep.checks;
    if (row_matrix(t, closed) != horizontal_by_tensor(t, cache, f, g)) rep.mismatches.push_back(what);
  };
  auto gens = generators(t);
  for (const auto& f : gens)
    for (int l = 0; l < t.d; ++l) {
      auto id = TruncMorphism::identity(t, l);
      check("id_" + std::to_string(l) + " o0 " + f.str(), whisker_left(t, l, f), id, f);
      check(f.str() + " o0 id_" + std::to_string(l), whisker_right(t, f, l), f, id);
    }
  for (const auto& f : gens)
    for (const auto& g : gens) check(f.str() + " o0 " + g.str(), horizontal(t, f, g), f, g);
  return rep;
}

std::string QuiverQD::dot() const {
  std::ostringstream os;
  os << "digraph QD {\n";
  for (int i = 0; i < d; ++i) os << "  \"" << i << "\";\n";
  for (const auto& a : loops) os << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\"" << a.label << "\"];\n";
  for (const auto& a : arrows) os << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\"" << a.label << "\"];\n";
  os << "}\n";
  return os.str();
}

QuiverQD quiver_QD(const TruncParams& t) {
  QuiverQD q;
  q.k = t.k;
  q.d = t.d;
  for (int i = 0; i < t.d; ++i) q.loops.push_back({i, i, "q_" + std::to_string(i), TruncMorphism::q(t, i)});
  for (int i = 0; i < t.d; ++i)
    for (int j = 0; j < t.d; ++j)
      if (i != j)
        q.arrows.push_back({i, j, "p_{" + std::to_string(j) + "," + std::to_string(i) + "}", TruncMorphism::p(t, j, i)});

  std::vector<QuiverArrowQD> all = q.loops;
  all.insert(all.end(), q.arrows.begin(), q.arrows.end());
  for (const auto& first : all)
    for (const auto& second : all) {
      if (first.to != second.from) continue;
      ++q.length_two_paths;
      bool zero = vertical(t, first.map, second.map).is_zero();
      if (zero) ++q.zero_length_two_paths;
      bool expect_zero = t.k == 2 || first.from != first.to || second.from != second.to;
      if (zero != expect_zero)
        q.failed_relations.push_back(first.label + " " + second.label + (zero ? " vanishes" : " does not vanish"));
    }

  auto fail = [&](const std::string& what) { q.failed_relations.push_back(what); };
  for (int i = 0; i < t.d; ++i) {
    auto qi = TruncMorphism::q(t, i);
    auto acc = TruncMorphism::identity(t, i);
    for (int s = 1; s <= t.k; ++s) {
      acc = vertical(t, qi, acc);
      if (s == t.k - 1 && acc.is_zero()) fail("q_" + std::to_string(i) + "^(k-1) = 0");
      if (s == t.k && !acc.is_zero()) fail("q_" + std::to_string(i) + "^k != 0");
    }
    for (int j = 0; j < t.d; ++j) {
      if (j == i) continue;
      auto pij = TruncMorphism::p(t, i, j);
      if (!vertical(t, TruncMorphism::q(t, j), pij).is_zero()) fail("q_j p_ij != 0");
      if (!vertical(t, pij, qi).is_zero()) fail("p_ij q_i != 0");
      for (int s = 0; s < t.d; ++s)
        if (s != i && !vertical(t, pij, TruncMorphism::p(t, s, i)).is_zero()) fail("p_ij p_si != 0");
      for (int u = 0; u < t.d; ++u)
        if (u != j && !vertical(t, TruncMorphism::p(t, j, u), pij).is_zero()) fail("p_jt p_ij != 0");
    }
  }
  return q;
}

VrAction simple_transitive_Vr(int d, int r) {
  if (d < 1 || r < 1 || d % r != 0) throw std::invalid_argument("r must be a positive divisor of d");
  VrAction v;
  v.d = d;
  v.r = r;
  // Cosets c + <r>, c = 0..r-1; F_i sends c to c + i.
  for (int i = 0; i < d; ++i) {
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
    for (int c = 0; c < r; ++c) m[(c + i) % r][c] = 1;
    v.matrices.push_back(std::move(m));
  }
  std::vector<std::vector<int>> sum(r, std::vector<int>(r, 0)), fd(r, std::vector<int>(r, 0));
  for (const auto& m : v.matrices)
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) sum[a][b] += m[a][b];
  v.transitive = true;
  for (const auto& row : sum)
    for (int x : row) v.transitive = v.transitive && x > 0;
  // [F_d] = [F_1]^d
  std::vector<std::vector<int>> acc(r, std::vector<int>(r, 0));
  for (int c = 0; c < r; ++c) acc[c][c] = 1;
  for (int step = 0; step < d; ++step) {
    std::vector<std::vector<int>> next(r, std::vector<int>(r, 0));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) next[a][b] += v.matrices[d > 1 ? 1 : 0][a][c] * acc[c][b];
    acc = std::move(next);
  }
  v.periodic = true;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) v.periodic = v.periodic && acc[a][b] == (a == b ? 1 : 0);
  return v;
}

bool center_condition(const TruncParams& t, const std::vector<Cyclo>& a) {
  check_vector(t, a);
  CMatrix dm = CMatrix::diagonal(t.zeta_vector()) * toeplitz(a);
  return power(dm, t.d) == CMatrix::identity(t.k);
}

bool center_condition_diagonalizable(const TruncParams& t, const std::vector<Cyclo>& a) {
  check_vector(t, a);
  return is_diagonalizable(CMatrix::diagonal(t.zeta_vector()) * toeplitz(a));
}

std::vector<std::vector<Cyclo>> center_hom(const TruncParams& t, const std::vector<Cyclo>& aphi,
                                           const std::vector<Cyclo>& apsi) {
  if (!center_condition(t, aphi) || !center_condition(t, apsi))
    throw std::invalid_argument("both vectors must satisfy the center condition");
  CMatrix d = CMatrix::diagonal(t.zeta_vector());
  CMatrix left = d * toeplitz(aphi), right = d * toeplitz(apsi);
  std::vector<CMatrix> terms;
  for (int u = 0; u < t.k; ++u) {
    CMatrix l = toeplitz(unit_vector(t.k, u));
    terms.push_back(left * l - l * right);
  }
  return solutions(terms);
}

CMatrix CenterObject::matrix(const TruncParams& t) const {
  std::size_t s = blocks.size();
  if (s == 0) throw std::invalid_argument("center object needs at least one copy of F_0");
  CMatrix m(s * t.k, s * t.k);
  for (std::size_t p = 0; p < s; ++p) {
    if (blocks[p].size() != s) throw std::invalid_argument("block matrix must be square");
    for (std::size_t q = 0; q < s; ++q) {
      const auto& b = blocks[p][q];
      if (static_cast<int>(b.size()) != t.k) throw std::invalid_argument("each block vector needs length k");
      if (b[0] != (p == q ? Cyclo(1) : Cyclo(0)))
        throw std::invalid_argument(p == q ? "diagonal blocks must lead with 1" : "off-diagonal blocks must lead with 0");
      m.set_block(p * t.k, q * t.k, toeplitz(b));
    }
  }
  return m;
}

CMatrix block_D(const TruncParams& t, std::size_t copies) {
  return block_diagonal(std::vector<CMatrix>(copies, CMatrix::diagonal(t.zeta_vector())));
}

bool center_condition_block(const TruncParams& t, const CenterObject& phi) {
  CMatrix m = block_D(t, phi.copies()) * phi.matrix(t);
  return power(m, t.d) == CMatrix::identity(m.rows());
}

bool center_condition_block_diagonalizable(const TruncParams& t, const CenterObject& phi) {
  return is_diagonalizable(block_D(t, phi.copies()) * phi.matrix(t));
}

std::vector<CMatrix> center_hom_block(const TruncParams& t, const CenterObject& phi, const CenterObject& psi) {
  std::size_t s = phi.copies(), u = psi.copies();
  CMatrix left = block_D(t, s) * phi.matrix(t), right = block_D(t, u) * psi.matrix(t);
  std::vector<CMatrix> units, terms;
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < u; ++q)
      for (int e = 0; e < t.k; ++e) {
        CMatrix m(s * t.k, u * t.k);
        m.set_block(p * t.k, q * t.k, toeplitz(unit_vector(t.k, e)));
        terms.push_back(left * m - m * right);
        units.push_back(std::move(m));
      }
  std::vector<CMatrix> out;
  for (const auto& c : solutions(terms)) {
    CMatrix m(s * t.k, u * t.k);
    for (std::size_t x = 0; x < units.size(); ++x) m = m + units[x].scaled(c[x]);
    out.push_back(std::move(m));
  }
  return out;
}

CenterFreeD2 enumerate_center_d2(int k) {
  if (k < 2) throw std::invalid_argument("need k >= 2");
  CenterFreeD2 out;
  out.k = k;
  std::size_t vars = k - 1;
  auto a = [&](int j) { return j == 0 ? MPoly::constant(vars, Rational(1)) : MPoly::variable(vars, j - 1); };
  // (D M_a)(r, c) = (-1)^r a_{c-r}
  std::vector<std::vector<MPoly>> dm(k, std::vector<MPoly>(k, MPoly(vars)));
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) dm[r][c] = r % 2 ? -a(c - r) : a(c - r);
  std::vector<MPoly> equations;
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) {
      MPoly e(vars);
      for (int m = r; m <= c; ++m) e = e + dm[r][m] * dm[m][c];
      if (r == c) e = e - MPoly::constant(vars, Rational(1));
      equations.push_back(e);
    }

  std::map<std::size_t, MPoly> solved;
  auto reduce = [&](MPoly p) {
    for (const auto& [v, s] : solved) p = p.substitute(v, s);
    return p;
  };
  for (;;) {
    std::vector<MPoly> open;
    for (const auto& e : equations) {
      MPoly r = reduce(e);
      if (!r.is_zero()) open.push_back(std::move(r));
    }
    if (open.empty()) break;
    // Solve for the lowest "top" variable that occurs linearly.
    std::size_t best_var = vars;
    MPoly best_value(vars);
    for (const auto& e : open) {
      std::size_t top = vars;
      for (std::size_t v = vars; v-- > 0;)
        if (e.mentions(v)) {
          top = v;
          break;
        }
      if (top == vars) throw std::logic_error("center condition is inconsistent for d = 2");
      Rational c;
      MPoly rest;
      if (!e.split_linear(top, c, rest)) continue;
      if (top < best_var) {
        best_var = top;
        best_value = rest.scaled(Rational(-1) / c);
      }
    }
    if (best_var == vars) throw std::logic_error("center condition for d = 2 is not triangular");
    for (auto& [v, s] : solved) s = s.substitute(best_var, best_value);
    solved.emplace(best_var, best_value);
  }
  for (std::size_t v = 0; v < vars; ++v) {
    auto it = solved.find(v);
    if (it == solved.end())
      out.free.push_back(static_cast<int>(v) + 1);
    else
      out.determined.emplace(static_cast<int>(v) + 1, it->second);
  }
  out.identity_after_substitution = true;
  for (const auto& e : equations)
    if (!reduce(e).is_zero()) out.identity_after_substitution = false;
  return out;
}

namespace {

GuardCase guard_case(const TruncParams& t, const std::vector<int>& idx) {
  GuardCase g;
  g.indices = idx;
  std::size_t s = idx.size();
  int k = t.k;
  // Unknown blocks of Phi(F_1) on F_{i_1+1} + ... + F_{i_s+1}.
  std::vector<CMatrix> units;
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) {
      if (idx[p] == idx[q]) {
        for (int e = 0; e < k; ++e) {
          CMatrix m(s * k, s * k);
          m.set_block(p * k, q * k, toeplitz(unit_vector(k, e)));
          units.push_back(std::move(m));
        }
      } else {
        CMatrix m(s * k, s * k);
        m(p * k, q * k + k - 1) = Cyclo(1);
        units.push_back(std::move(m));
      }
    }
  CMatrix top = toeplitz(unit_vector(k, k - 1)), shift = toeplitz(unit_vector(k, 1));
  std::vector<CMatrix> p_twist, p_plain, q_twist, q_plain;
  for (int i : idx) {
    p_twist.push_back(top.scaled(t.zeta(static_cast<long>(i) * (k - 1))));
    p_plain.push_back(top);
    q_twist.push_back(shift.scaled(t.zeta(i)));
    q_plain.push_back(shift);
  }
  CMatrix pt = block_diagonal(p_twist), pp = block_diagonal(p_plain);
  CMatrix qt = block_diagonal(q_twist), qp = block_diagonal(q_plain);

  // Along p_10: M_Phi pt = pp. Along q_1: M_Phi qt = qp M_Phi.
  std::size_t n = s * k, cells = n * n;
  CMatrix sys(2 * cells, units.size());
  std::vector<Cyclo> rhs(2 * cells, Cyclo(0));
  for (std::size_t u = 0; u < units.size(); ++u) {
    CMatrix a = units[u] * pt, b = units[u] * qt - qp * units[u];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        sys(r * n + c, u) = a(r, c);
        sys(cells + r * n + c, u) = b(r, c);
      }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rhs[r * n + c] = pp(r, c);
  g.solvable = solve(sys, rhs).has_value();

  CMatrix one = CMatrix::identity(n);
  g.identity_solves = one * pt == pp && one * qt == qp * one;

  if (s == 1) {
    std::vector<CMatrix> q_terms;
    for (const auto& u : units) q_terms.push_back(u * qt - qp * u);
    g.q_kills_diagonal = true;
    for (const auto& sol : solutions(q_terms))
      if (!sol[0].is_zero()) g.q_kills_diagonal = false;
  }
  return g;
}

}  // namespace

GuardReport center_classification_guard(const TruncParams& t) {
  GuardReport rep;
  rep.k = t.k;
  rep.d = t.d;
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < t.d; ++i) sets.push_back({i});
  for (int i = 0; i < t.d; ++i)
    for (int j = i; j < t.d; ++j) sets.push_back({i, j});
  for (const auto& idx : sets) {
    GuardCase g = guard_case(t, idx);
    bool all_zero = std::all_of(idx.begin(), idx.end(), [](int i) { return i == 0; });
    std::string name = "F_" + std::to_string(idx[0]) + (idx.size() > 1 ? " + F_" + std::to_string(idx[1]) : "");
    if (all_zero && (!g.solvable || !g.identity_solves)) rep.unexpected.push_back(name + ": expected solutions");
    if (!all_zero && g.solvable) rep.unexpected.push_back(name + ": unexpected solution");
    if (!all_zero && idx.size() == 1 && !g.q_kills_diagonal)
      rep.unexpected.push_back(name + ": naturality along q_1 leaves an invertible candidate");
    rep.cases.push_back(std::move(g));
  }
  return rep;
}

std::vector<CMatrix> reconstruct_phi(const TruncParams& t, const std::vector<Cyclo>& a) {
  check_vector(t, a);
  TruncMorphism phi1{1, 1, a};
  phi1.source = phi1.target = t.index(1);
  std::vector<TruncMorphism> phis{TruncMorphism::identity(t, 0), phi1};
  for (int s = 2; s <= t.d; ++s)
    phis.push_back(vertical(t, whisker_left(t, 1, phis.back()), whisker_right(t, phi1, s - 1)));
  std::vector<CMatrix> out;
  for (const auto& f : phis) out.push_back(row_matrix(t, f));
  return out;
}

CMatrix phi_closed(const TruncParams& t, const std::vector<Cyclo>& a, int s) {
  check_vector(t, a);
  CMatrix dm = CMatrix::diagonal(t.zeta_vector()) * toeplitz(a);
  return power_of_d(t, -s) * power(dm, s);
}

std::vector<std::vector<Cyclo>> center_corpus(const TruncParams& t, std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  // Raw engine output only, so the corpus is the same under every standard library.
  auto below = [&](int m) { return static_cast<int>(rng() % static_cast<std::uint32_t>(m)); };
  auto entry = [&]() {
    Cyclo c(below(7) - 3);
    if (t.d > 2 && below(3) == 0) {
      Cyclo scale(below(7) - 3);
      c += scale * t.zeta(1 + below(t.d - 1));
    }
    return c;
  };
  CMatrix d = CMatrix::diagonal(t.zeta_vector());
  CMatrix d_inv = power_of_d(t, -1);
  std::vector<std::vector<Cyclo>> out;
  for (std::size_t n = 0; n < count; ++n) {
    if (n % 2 == 0) {
      std::vector<Cyclo> a{Cyclo(1)};
      for (int m = 1; m < t.k; ++m) a.push_back(entry());
      out.push_back(std::move(a));
      continue;
    }
    std::vector<Cyclo> b{Cyclo(below(3) + 1)};
    for (int m = 1; m < t.k; ++m) b.push_back(entry());
    CMatrix mb = toeplitz(b);
    CMatrix m = d_inv * *inverse(mb) * d * mb;
    std::vector<Cyclo> a;
    for (int c = 0; c < t.k; ++c) a.push_back(m(0, c));
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Cyclo> parse_cyclo_vector(const std::string& csv, int d) {
  std::vector<Cyclo> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = csv.find(',', start);
    std::string item = csv.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      out.push_back(Cyclo::parse(item, d));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("entry " + std::to_string(out.size() + 1) + " at column " +
                                  std::to_string(start + 1) + ": " + e.what());
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_cyclo_vector(const std::vector<Cyclo>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out;
}

}  // namespace twocat
