#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twocat/poly.hpp"
#include "twocat/scalar.hpp"

namespace twocat {

// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<Rational>& cyclotomic_polynomial(int d);

int euler_phi(int d);

// Element of Q(zeta_d), stored reduced modulo the d-th cyclotomic polynomial.
// Elements that happen to be rational carry conductor 0, so they mix freely
// with any field; two irrational elements must share their conductor.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long v) : Cyclo(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(int v) : Cyclo(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& q);              // NOLINT(google-explicit-constructor)

  static Cyclo zeta(int d, long power = 1);
  static Cyclo from_coeffs(int d, std::vector<Rational> coeffs);

  int conductor() const { return d_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return d_ == 0; }
  Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

  Cyclo inverse() const;
  Cyclo pow(long e) const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  bool operator==(const Cyclo& o) const { return d_ == o.d_ && c_ == o.c_; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // Polynomial in z, e.g. "1/2 - 3*z^2".
  std::string str() const;
  // Inverse of str(); powers of z beyond the field degree are reduced.
  static Cyclo parse(const std::string& text, int d);

 private:
  static int common_conductor(const Cyclo& a, const Cyclo& b);
  void normalize();
  int d_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline std::string to_string(const Cyclo& x) { return x.str(); }
std::ostream& operator<<(std::ostream& os, const Cyclo& x);

}  // namespace twocat
