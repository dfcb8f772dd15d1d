#include "twocat/center.hpp"

#include <stdexcept>

namespace twocat {

SplitDatum split_datum(const DirectSum<Rational>& sum, const std::vector<Bimodule<Rational>>& parts,
                       const Bimodule<Rational>& k) {
  if (parts.size() != sum.injections.size()) throw std::invalid_argument("direct sum and parts disagree");
  SplitDatum d;
  auto id_k = Matrix<Rational>::identity(k.dim());
  auto sum_k = tensor_full(sum.module, k);
  auto k_sum = tensor_full(k, sum.module);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto part_k = tensor_full(parts[i], k);
    auto k_part = tensor_full(k, parts[i]);
    d.inject_before.push_back(tensor_map(part_k, sum_k, sum.injections[i], id_k));
    d.project_before.push_back(tensor_map(sum_k, part_k, sum.projections[i], id_k));
    d.inject_after.push_back(tensor_map(k_part, k_sum, id_k, sum.injections[i]));
    d.project_after.push_back(tensor_map(k_sum, k_part, id_k, sum.projections[i]));
  }
  return d;
}

Matrix<Rational> direct_sum_theta(const SplitDatum& d, const std::vector<Matrix<Rational>>& phis) {
  if (phis.size() != d.inject_after.size()) throw std::invalid_argument("one component per summand expected");
  if (phis.empty()) throw std::invalid_argument("empty direct sum");
  Matrix<Rational> theta(d.inject_after[0].rows(), d.project_before[0].cols());
  for (std::size_t i = 0; i < phis.size(); ++i) theta = theta + d.inject_after[i] * phis[i] * d.project_before[i];
  return theta;
}

namespace {

void check_shapes(const SplitDatum& d) {
  std::size_t m = d.inject_before.size();
  if (m == 0 || d.project_before.size() != m || d.inject_after.size() != m || d.project_after.size() != m)
    throw std::invalid_argument("splitting datum needs one map of each kind per summand");
  std::size_t fk = d.theta.cols(), kf = d.theta.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (d.inject_before[i].rows() != fk || d.project_before[i].cols() != fk ||
        d.inject_after[i].rows() != kf || d.project_after[i].cols() != kf ||
        d.inject_before[i].cols() != d.project_before[i].rows() ||
        d.inject_after[i].cols() != d.project_after[i].rows())
      throw std::invalid_argument("splitting datum has mismatched shapes");
  }
  if (fk != kf) throw std::invalid_argument("Theta(K) must be square");
}

}  // namespace

bool splitting_check(const std::vector<SplitDatum>& data) {
  bool direct = true, inverse_form = true;
  for (const auto& d : data) {
    check_shapes(d);
    auto inv = inverse(d.theta);
    if (!inv) throw std::invalid_argument("Theta(K) is not invertible");
    std::size_t m = d.inject_before.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        if (!(d.project_after[j] * d.theta * d.inject_before[i]).is_zero()) direct = false;
        if (!(d.project_before[j] * (*inv) * d.inject_after[i]).is_zero()) inverse_form = false;
      }
  }
  if (direct != inverse_form) throw std::logic_error("the two forms of the splitting condition disagree");
  return direct;
}

std::vector<std::vector<Rational>> joint_nullspace(std::size_t unknowns,
                                                   const std::vector<std::vector<Matrix<Rational>>>& equations) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& eq : equations) {
    if (eq.size() != unknowns) throw std::invalid_argument("equation needs one term per unknown");
    std::size_t r = 0, c = 0;
    bool shaped = false;
    for (const auto& t : eq) {
      if (t.rows() == 0 && t.cols() == 0) continue;
      if (shaped && (t.rows() != r || t.cols() != c)) throw std::invalid_argument("terms of an equation differ in shape");
      r = t.rows(), c = t.cols(), shaped = true;
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        std::vector<Rational> row(unknowns, Rational(0));
        bool any = false;
        for (std::size_t u = 0; u < unknowns; ++u)
          if (eq[u].rows() == r && eq[u].cols() == c && !is_zero(eq[u](i, j))) row[u] = eq[u](i, j), any = true;
        if (any) rows.push_back(std::move(row));
      }
  }
  Matrix<Rational> sys(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t u = 0; u < unknowns; ++u) sys(i, u) = rows[i][u];
  return nullspace(sys);
}

}  // namespace twocat
