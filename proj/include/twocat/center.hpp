#pragma once

#include <vector>

#include "twocat/bimodule.hpp"

namespace twocat {

// Theta(K) for a candidate center datum on F = F_1 + ... + F_m, with the
// whiskered injections and projections that cut it into blocks.
struct SplitDatum {
  Matrix<Rational> theta;                          // F o K -> K o F
  std::vector<Matrix<Rational>> inject_before;     // iota_i o0 id_K : F_i o K -> F o K
  std::vector<Matrix<Rational>> project_before;    // pi_j o0 id_K : F o K -> F_j o K
  std::vector<Matrix<Rational>> inject_after;      // id_K o0 iota_i : K o F_i -> K o F
  std::vector<Matrix<Rational>> project_after;     // id_K o0 pi_j : K o F -> K o F_j
};

// Whiskered maps for K against a direct sum; theta is left empty.
SplitDatum split_datum(const DirectSum<Rational>& sum, const std::vector<Bimodule<Rational>>& parts,
                       const Bimodule<Rational>& k);

// sum_i (id_K o0 iota_i) phi_i (pi_i o0 id_K), with phi_i : F_i o K -> K o F_i.
Matrix<Rational> direct_sum_theta(const SplitDatum& d, const std::vector<Matrix<Rational>>& phis);

// True iff every off-diagonal block (id_K o0 pi_j) Theta(K) (iota_i o0 id_K)
// vanishes. The inverse form is checked too and must agree. Throws
// std::invalid_argument on inconsistent shapes or a non-invertible Theta(K).
bool splitting_check(const std::vector<SplitDatum>& data);

// Coefficient vectors c with sum_u c_u eq[u] = 0 for every equation. Each
// equation lists one matrix per unknown; an empty (0 x 0) matrix means the
// unknown does not occur.
std::vector<std::vector<Rational>> joint_nullspace(std::size_t unknowns,
                                                   const std::vector<std::vector<Matrix<Rational>>>& equations);

}  // namespace twocat
