#include <stdexcept>

#include "twocat/bimodule.hpp"

namespace twocat {

std::shared_ptr<const Quiver> quiver_of(const AlgebraPtr& a) {
  return std::shared_ptr<const Quiver>(a, &a->quiver());
}

namespace {

// Path-basis bimodule; left(a, p) and right(a, p) give the index of the
// product path inside `basis`, or -1 when the product vanishes.
template <class LeftFn, class RightFn>
Bimodule<Rational> path_bimodule(const AlgebraPtr& a, const std::vector<int>& basis, LeftFn left, RightFn right) {
  Bimodule<Rational> m;
  m.quiver = quiver_of(a);
  std::size_t n = basis.size();
  for (int p : basis) {
    m.labels.push_back(a->describe(p));
    m.left_vertex.push_back(a->target(p));
    m.right_vertex.push_back(a->source(p));
  }
  const Quiver& q = a->quiver();
  for (int arrow = 0; arrow < q.arrow_count(); ++arrow) {
    int pa = a->path_between(q.arrow(arrow).source, q.arrow(arrow).target);
    Matrix<Rational> L(n, n), R(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      int l = left(pa, basis[c]);
      if (l >= 0) L(l, c) = 1;
      int r = right(pa, basis[c]);
      if (r >= 0) R(r, c) = 1;
    }
    m.left.push_back(std::move(L));
    m.right.push_back(std::move(R));
  }
  return m;
}

}  // namespace

Bimodule<Rational> quotient_bimodule(const Ideal& j, const Ideal& i) {
  if (j.algebra() != i.algebra()) throw std::invalid_argument("ideals of different algebras");
  if (!i.subset_of(j)) throw std::invalid_argument("quotient J/I needs I inside J");
  const AlgebraPtr& a = j.algebra();
  auto in_j = j.span_mask();
  auto in_i = i.span_mask();
  std::vector<int> basis;
  std::vector<int> slot(a->path_count(), -1);
  for (int p = 0; p < a->path_count(); ++p)
    if (in_j[p] && !in_i[p]) {
      slot[p] = static_cast<int>(basis.size());
      basis.push_back(p);
    }
  auto image = [&](int prod) { return prod < 0 ? -1 : slot[prod]; };
  return path_bimodule(
      a, basis, [&](int pa, int p) { return image(a->compose(pa, p)); },
      [&](int pa, int p) { return image(a->compose(p, pa)); });
}

Bimodule<Rational> ideal_bimodule(const Ideal& i) { return quotient_bimodule(i, Ideal::zero(i.algebra())); }

Bimodule<Rational> identity_bimodule(const AlgebraPtr& a) { return ideal_bimodule(Ideal::unit(a)); }

Bimodule<Rational> twisted_identity(const Ideal& i) {
  if (!is_complementary(i).level_one) throw std::invalid_argument("twisted identity needs an ideal generated by arrows");
  const AlgebraPtr& a = i.algebra();
  std::vector<int> basis(a->path_count());
  for (int p = 0; p < a->path_count(); ++p) basis[p] = p;
  auto killed = i.span_mask();
  return path_bimodule(
      a, basis, [&](int pa, int p) { return killed[pa] ? -1 : a->compose(pa, p); },
      [&](int pa, int p) { return a->compose(p, pa); });
}

}  // namespace twocat
