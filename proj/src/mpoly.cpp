#include "twocat/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace twocat {

MPoly MPoly::constant(std::size_t vars, const Rational& c) {
  MPoly p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t vars, std::size_t v) {
  if (v >= vars) throw std::invalid_argument("variable index out of range");
  MPoly p(vars);
  Exponents e(vars, 0);
  e[v] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (twocat::is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (twocat::is_zero(it->second)) terms_.erase(it);
}

int MPoly::degree_in(std::size_t v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials in different variable sets");
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const { return scaled(Rational(-1)); }

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials in different variable sets");
  MPoly r(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(vars_);
      for (std::size_t v = 0; v < vars_; ++v) e[v] = e1[v] + e2[v];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::scaled(const Rational& s) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

MPoly MPoly::substitute(std::size_t v, const MPoly& p) const {
  MPoly r(vars_);
  std::vector<MPoly> powers{constant(vars_, Rational(1))};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[v]) powers.push_back(powers.back() * p);
    Exponents rest = e;
    rest[v] = 0;
    MPoly mono(vars_);
    mono.add_term(rest, c);
    r = r + mono * powers[e[v]];
  }
  return r;
}

bool MPoly::split_linear(std::size_t v, Rational& c, MPoly& rest) const {
  rest = MPoly(vars_);
  c = Rational(0);
  for (const auto& [e, coef] : terms_) {
    if (e[v] == 0) {
      rest.add_term(e, coef);
      continue;
    }
    if (e[v] > 1) return false;
    for (std::size_t u = 0; u < vars_; ++u)
      if (u != v && e[u] != 0) return false;
    c = coef;
  }
  return !twocat::is_zero(c);
}

Rational MPoly::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != vars_) throw std::invalid_argument("wrong number of values");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < vars_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= x[v];
    total += t;
  }
  return total;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < vars_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.empty() ? "a" + std::to_string(v + 1) : names.at(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace twocat
