#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twocat/quiver.hpp"

namespace twocat {

// Path algebra of a tree quiver: paths indexed in canonical order.
class PathAlgebra {
 public:
  explicit PathAlgebra(Quiver q);

  const Quiver& quiver() const { return q_; }
  const std::vector<Path>& paths() const { return paths_; }
  int path_count() const { return static_cast<int>(paths_.size()); }
  const Path& path(int p) const { return paths_.at(p); }
  int source(int p) const { return paths_[p].source; }
  int target(int p) const { return paths_[p].target; }
  int length(int p) const { return static_cast<int>(paths_[p].length()); }
  int trivial(int v) const { return between_[v][v]; }
  // Index of the unique path s -> t, or -1.
  int path_between(int s, int t) const { return between_[s][t]; }
  int index_of(const Path& p) const;
  // outer o inner, or -1 when not composable.
  int compose(int outer, int inner) const {
    if (source(outer) != target(inner)) return -1;
    return between_[source(inner)][target(outer)];
  }
  // p <= p' in the subpath order.
  bool leq(int p, int p2) const {
    return between_[source(p2)][source(p)] >= 0 && between_[target(p)][target(p2)] >= 0;
  }
  std::string describe(int p) const { return twocat::describe(q_, paths_[p]); }
  int parse(const std::string& text) const { return index_of(parse_path(q_, text)); }

 private:
  Quiver q_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> between_;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

AlgebraPtr make_algebra(Quiver q);

// Two-sided ideal stored as its anti-chain of minimal path generators.
class Ideal {
 public:
  Ideal() = default;
  // Throws unless the generators form an anti-chain.
  Ideal(AlgebraPtr a, std::vector<int> generators);

  static Ideal zero(AlgebraPtr a) { return Ideal(std::move(a), {}); }
  static Ideal unit(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return a_; }
  const std::vector<int>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(int p) const;
  std::vector<char> span_mask() const;
  bool subset_of(const Ideal& o) const;

  bool operator==(const Ideal& o) const { return a_ == o.a_ && gens_ == o.gens_; }
  bool operator!=(const Ideal& o) const { return !(*this == o); }
  bool operator<(const Ideal& o) const { return gens_ < o.gens_; }

  std::vector<std::string> descriptors() const;
  std::string str() const;

 private:
  AlgebraPtr a_;
  std::vector<int> gens_;
};

std::vector<int> span_paths(const Ideal& i);
Ideal minimal_generators(const AlgebraPtr& a, const std::vector<int>& paths);
Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
bool is_idempotent(const Ideal& i);

struct Complementarity {
  bool complementary = false;
  bool level_one = false;  // member of CI^(1): zero, or all generators arrows
};
Complementarity is_complementary(const Ideal& i);

Ideal K_of(const Ideal& i);
std::vector<Ideal> stabilizer(const Ideal& i, const std::vector<Ideal>& family);
std::vector<Ideal> enumerate_ideals(const AlgebraPtr& a);
// Ideals generated by sets of arrows, i.e. CI^(1).
std::vector<Ideal> level_one_ideals(const AlgebraPtr& a);

Ideal parse_ideal(const AlgebraPtr& a, const std::vector<std::string>& descriptors);

}  // namespace twocat
