#include "twocat/ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace twocat {

PathAlgebra::PathAlgebra(Quiver q) : q_(std::move(q)) {
  if (!q_.is_tree()) throw std::invalid_argument("path algebra requires a tree quiver");
  paths_ = enumerate_paths(q_);
  int n = q_.vertex_count();
  between_.assign(n, std::vector<int>(n, -1));
  for (int p = 0; p < path_count(); ++p) {
    int& slot = between_[paths_[p].source][paths_[p].target];
    if (slot >= 0) throw std::logic_error("two paths share endpoints in a tree quiver");
    slot = p;
  }
}

int PathAlgebra::index_of(const Path& p) const {
  int i = between_.at(p.source).at(p.target);
  if (i < 0 || paths_[i] != p) throw std::invalid_argument("path does not belong to this algebra");
  return i;
}

AlgebraPtr make_algebra(Quiver q) { return std::make_shared<const PathAlgebra>(std::move(q)); }

Ideal::Ideal(AlgebraPtr a, std::vector<int> generators) : a_(std::move(a)), gens_(std::move(generators)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (int g : gens_)
    if (g < 0 || g >= a_->path_count()) throw std::invalid_argument("generator is not a path of the algebra");
  for (std::size_t x = 0; x < gens_.size(); ++x)
    for (std::size_t y = 0; y < gens_.size(); ++y)
      if (x != y && a_->leq(gens_[x], gens_[y]))
        throw std::invalid_argument("ideal generators must be pairwise incomparable");
}

Ideal Ideal::unit(AlgebraPtr a) {
  std::vector<int> g;
  for (int v = 0; v < a->quiver().vertex_count(); ++v) g.push_back(a->trivial(v));
  return Ideal(std::move(a), std::move(g));
}

bool Ideal::contains(int p) const {
  for (int g : gens_)
    if (a_->leq(g, p)) return true;
  return false;
}

std::vector<char> Ideal::span_mask() const {
  std::vector<char> m(a_->path_count(), 0);
  for (int p = 0; p < a_->path_count(); ++p) m[p] = contains(p);
  return m;
}

bool Ideal::subset_of(const Ideal& o) const {
  for (int g : gens_)
    if (!o.contains(g)) return false;
  return true;
}

std::vector<std::string> Ideal::descriptors() const {
  std::vector<std::string> d;
  for (int g : gens_) d.push_back(a_->describe(g));
  return d;
}

std::string Ideal::str() const {
  if (gens_.empty()) return "0";
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + a_->describe(gens_[i]);
  return s + ">";
}

std::vector<int> span_paths(const Ideal& i) {
  std::vector<int> out;
  auto m = i.span_mask();
  for (int p = 0; p < static_cast<int>(m.size()); ++p)
    if (m[p]) out.push_back(p);
  return out;
}

Ideal minimal_generators(const AlgebraPtr& a, const std::vector<int>& paths) {
  std::vector<int> gens;
  for (int p : paths) {
    bool minimal = true;
    for (int q : paths)
      if (q != p && a->leq(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) gens.push_back(p);
  }
  return Ideal(a, std::move(gens));
}

namespace {
void same_algebra(const Ideal& i, const Ideal& j) {
  if (i.algebra() != j.algebra()) throw std::invalid_argument("ideals of different algebras");
}
}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  same_algebra(i, j);
  std::vector<int> all = i.generators();
  all.insert(all.end(), j.generators().begin(), j.generators().end());
  return minimal_generators(i.algebra(), all);
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  same_algebra(i, j);
  const auto& a = i.algebra();
  std::vector<int> cands;
  for (int w : i.generators())
    for (int u : j.generators()) {
      // w o a o u for the connecting path a : target(u) -> source(w)
      int mid = a->path_between(a->target(u), a->source(w));
      if (mid < 0) continue;
      cands.push_back(a->path_between(a->source(u), a->target(w)));
    }
  return minimal_generators(a, cands);
}

bool is_idempotent(const Ideal& i) {
  bool idem = ideal_product(i, i) == i;
  if (idem)
    for (int g : i.generators())
      if (i.algebra()->length(g) != 0) throw std::logic_error("idempotent ideal with a generator of positive length");
  return idem;
}

Complementarity is_complementary(const Ideal& i) {
  Complementarity c{true, true};
  for (int g : i.generators()) {
    int l = i.algebra()->length(g);
    if (l > 1) c.complementary = false;
    if (l != 1) c.level_one = false;
  }
  return c;
}

Ideal K_of(const Ideal& i) {
  if (i.is_zero()) throw std::invalid_argument("K_of needs a nonzero ideal");
  std::vector<int> g;
  for (int p : i.generators()) g.push_back(i.algebra()->trivial(i.algebra()->target(p)));
  return minimal_generators(i.algebra(), g);
}

std::vector<Ideal> stabilizer(const Ideal& i, const std::vector<Ideal>& family) {
  std::vector<Ideal> out;
  for (const auto& j : family)
    if (ideal_product(j, i) == i) out.push_back(j);
  return out;
}

std::vector<Ideal> enumerate_ideals(const AlgebraPtr& a) {
  int n = a->path_count();
  std::vector<Ideal> out;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int from) {
    out.emplace_back(a, chosen);
    for (int p = from; p < n; ++p) {
      bool ok = true;
      for (int c : chosen)
        if (a->leq(c, p) || a->leq(p, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(p);
      rec(p + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> level_one_ideals(const AlgebraPtr& a) {
  std::vector<int> arrows;
  for (int p = 0; p < a->path_count(); ++p)
    if (a->length(p) == 1) arrows.push_back(p);
  std::vector<Ideal> out;
  for (unsigned mask = 0; mask < (1u << arrows.size()); ++mask) {
    std::vector<int> g;
    for (std::size_t b = 0; b < arrows.size(); ++b)
      if ((mask >> b) & 1) g.push_back(arrows[b]);
    out.emplace_back(a, std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ideal parse_ideal(const AlgebraPtr& a, const std::vector<std::string>& descriptors) {
  std::vector<int> paths;
  for (const auto& d : descriptors) paths.push_back(a->parse(d));
  return minimal_generators(a, paths);
}

}  // namespace twocat
