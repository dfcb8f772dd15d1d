#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twocat/scalar.hpp"

namespace twocat {

// Univariate polynomial; index i holds the coefficient of t^i.
// The coefficient vector never carries trailing zeros.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
  static Poly monomial(std::size_t e, const F& a = F(1)) {
    std::vector<F> c(e + 1, F(0));
    c[e] = a;
    return Poly(std::move(c));
  }
  // t - r
  static Poly linear_root(const F& r) { return Poly(std::vector<F>{-r, F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator+(const Poly& o) const {
    std::vector<F> c(std::max(c_.size(), o.c_.size()), F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return Poly(std::move(c));
  }
  Poly operator-() const {
    std::vector<F> c(c_.size(), F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<F> c(c_.size() + o.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (twocat::scalar_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
  }
  Poly scaled(const F& a) const {
    std::vector<F> c(c_.size(), F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * a;
    return Poly(std::move(c));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly monic() const {
    if (c_.empty()) return *this;
    F inv = F(1) / c_.back();
    return scaled(inv);
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> c(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * F(static_cast<long>(i));
    return Poly(std::move(c));
  }

  F operator()(const F& x) const {
    F acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Quotient and remainder of a by b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> r = a.c_;
    if (r.size() < b.c_.size()) return {Poly(), a};
    std::vector<F> q(r.size() - b.c_.size() + 1, F(0));
    F inv = F(1) / b.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      F f = r[k + b.c_.size() - 1] * inv;
      q[k] = f;
      if (twocat::scalar_zero(f)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] = r[k + j] - f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && twocat::scalar_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = Poly<F>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// g = u*a + v*b with g the monic gcd.
template <class F>
struct Bezout {
  Poly<F> g, u, v;
};

template <class F>
Bezout<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = Poly<F>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// True iff p has no repeated factor (char 0).
template <class F>
bool is_squarefree(const Poly<F>& p) {
  if (p.degree() <= 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace twocat
