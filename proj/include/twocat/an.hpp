#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "twocat/bimodule.hpp"
#include "twocat/cells.hpp"
#include "twocat/center.hpp"
#include "twocat/ideal.hpp"

namespace twocat {

// The interval (i, j), 1 <= i <= j <= n, naming M_{i,j} = J_i / J_{j+1}.
struct Interval {
  int i = 1, j = 1;

  bool operator==(const Interval& o) const { return i == o.i && j == o.j; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
  bool operator<(const Interval& o) const { return i != o.i ? i < o.i : j < o.j; }
  std::string str() const;
};

Interval parse_interval(const std::string& text);  // "i,j" or "(i,j)"

// Lexicographic list of all intervals.
std::vector<Interval> all_intervals(int n);

// Uniformly oriented A_n with its interval bimodules, built on first use.
// Lookups are safe from several threads.
class AnContext {
 public:
  explicit AnContext(int n);

  int n() const { return n_; }
  const AlgebraPtr& algebra() const { return a_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  // J_p generated by e_p, ..., e_n; J_{n+1} = 0.
  Ideal J(int p) const;
  const Bimodule<Rational>& M(Interval f) const;
  // The interval whose bimodule has the same bigrades as m, if any.
  std::optional<Interval> match(const Bimodule<Rational>& m) const;
  // Index of the trivial path e_v in the path basis of M(f), or -1.
  int top_index(Interval f, int v) const;

 private:
  void check(Interval f) const;

  int n_;
  AlgebraPtr a_;
  std::vector<Interval> intervals_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Interval, std::shared_ptr<const Bimodule<Rational>>> cache_;
};

Bimodule<Rational> build_M(int n, int i, int j);

std::optional<Interval> compose_closed(int n, Interval a, Interval b);

// Summands of M_a (x) M_b identified as intervals, with multiplicities.
// Throws std::logic_error when a summand is not an interval bimodule.
std::vector<std::pair<Interval, int>> compose_oracle(const AnContext& ctx, Interval a, Interval b);

// 1 iff i' <= i <= j' <= j for a = (i, j), b = (i', j').
int hom_dim_closed(int n, Interval a, Interval b);

// The path-identity map M_a -> M_b, or nullopt when Hom(M_a, M_b) = 0.
std::optional<Matrix<Rational>> sigma(const AnContext& ctx, Interval a, Interval b);

// Decomposition of the twisted identity predicted by cutting the rows of the
// arrows in I: (1, i_1), (i_1 + 1, i_2), ..., (i_s + 1, n).
std::vector<Interval> interval_cut(int n, const Ideal& level_one);

struct QuiverArrowAn {
  Interval from, to;
  Matrix<Rational> map;  // the bimodule map M_to -> M_from
};

struct QuiverRelationAn {
  std::string kind;  // "square", "zero" or "composition"
  std::vector<Interval> vertices;
  bool holds = false;
};

struct PrincipalQuiverAn {
  int n = 0;
  std::vector<Interval> vertices;
  std::vector<QuiverArrowAn> arrows;
  std::vector<QuiverRelationAn> relations;

  bool ok() const;
  std::string dot() const;
};

PrincipalQuiverAn principal_quiver(const AnContext& ctx);

// Cells from the composition oracle.
CellStructure cells_An(const AnContext& ctx);

// H with H o F = F: closed form and from the oracle.
std::vector<Interval> st_set_closed(int n, Interval f);
std::vector<Interval> st_set_oracle(const AnContext& ctx, Interval f);

// epsilon^F(K) : F o K -> K o F for every interval K, normalised so that the
// class of e_v (x) e_v, v = max(i, i'), goes to its counterpart.
struct BraidingFamily {
  Interval f;
  std::vector<Interval> ks;
  std::vector<Matrix<Rational>> maps;
};

BraidingFamily braiding(const AnContext& ctx, Interval f);

// Condition (1c) for the pair (K, H), with Theta on K o H transported along
// an isomorphism K o H -> M_c. `thetas` is indexed like ctx.intervals().
bool hexagon_holds(const AnContext& ctx, Interval f, const std::vector<Matrix<Rational>>& thetas, Interval k,
                   Interval h);

struct CenterObjectReportAn {
  Interval f;
  std::size_t solution_dim = 0;       // homogeneous naturality system on the generating maps
  bool normalised_is_braiding = false;
  bool natural_everywhere = false;    // against a basis of every Hom space
  bool hexagon = false;
  std::size_t end_dim = 0;
};

struct CenterHomReportAn {
  Interval f, g;
  std::size_t hom_dim = 0;     // Hom(M_f, M_g)
  std::size_t center_dim = 0;  // maps compatible with the braidings
};

struct SplittingReportAn {
  Interval f, g;
  bool direct_sum_splits = false;
  bool perturbed_splits = true;
};

struct CenterReportAn {
  std::vector<CenterObjectReportAn> objects;
  std::vector<CenterHomReportAn> homs;
  std::vector<SplittingReportAn> splittings;

  bool ok() const;
};

CenterReportAn center_An(const AnContext& ctx);

// splitting data of (M_f, eps^f) + (M_g, eps^g); with `perturb` an extra
// off-diagonal block is added to Theta(A).
std::vector<SplitDatum> interval_direct_sum_data(const AnContext& ctx, Interval f, Interval g, bool perturb);

}  // namespace twocat
