#pragma once

#include <map>
#include <string>
#include <vector>

#include "twocat/scalar.hpp"

namespace twocat {

// Polynomial in a fixed number of variables with rational coefficients.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  explicit MPoly(std::size_t vars) : vars_(vars) {}
  static MPoly constant(std::size_t vars, const Rational& c);
  static MPoly variable(std::size_t vars, std::size_t v);

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_in(std::size_t v) const;
  bool mentions(std::size_t v) const { return degree_in(v) > 0; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Rational& c) const;
  bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Replace variable v by p.
  MPoly substitute(std::size_t v, const MPoly& p) const;
  // p = c * x_v + rest with c constant and rest free of x_v; false otherwise.
  bool split_linear(std::size_t v, Rational& c, MPoly& rest) const;
  Rational evaluate(const std::vector<Rational>& x) const;

  // Names default to a1, a2, ... when empty.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::size_t vars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace twocat
