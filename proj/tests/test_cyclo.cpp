#include <vector>

#include "doctest.h"
#include "twocat/cyclo.hpp"
#include "twocat/matrix.hpp"

using namespace twocat;

namespace {

Poly<Rational> rpoly(std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.push_back(Rational(x));
  return Poly<Rational>(r);
}

// Deterministic sample of elements of Q(zeta_d).
std::vector<Cyclo> corpus(int d) {
  std::vector<Cyclo> out;
  int n = euler_phi(d);
  for (int s = 0; s < 12; ++s) {
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(Rational((s * 7 + i * 5) % 11 - 5, 1 + (s + i) % 4));
    Cyclo x = Cyclo::from_coeffs(d, c);
    if (!x.is_zero()) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(Poly<Rational>(cyclotomic_polynomial(2)) == rpoly({1, 1}));
  CHECK(Poly<Rational>(cyclotomic_polynomial(3)) == rpoly({1, 1, 1}));
  CHECK(Poly<Rational>(cyclotomic_polynomial(6)) == rpoly({1, -1, 1}));
  // oracle: the product over all divisors recovers x^d - 1
  for (int d = 1; d <= 12; ++d) {
    Poly<Rational> prod = rpoly({1});
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) prod = prod * Poly<Rational>(cyclotomic_polynomial(e));
    std::vector<long> top(d + 1, 0);
    top[0] = -1;
    top[d] = 1;
    CHECK(prod == rpoly(top));
  }
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("scalar arithmetic in Q(zeta_d)") {
  Cyclo z3 = Cyclo::zeta(3);
  CHECK(z3.pow(3) == Cyclo(1));
  CHECK((Cyclo(1) + z3).inverse() == -z3);
  CHECK(Cyclo::zeta(2) == Cyclo(-1));
  CHECK(Cyclo(1) + z3 + z3 * z3 == Cyclo(0));
  CHECK_THROWS(Cyclo(0).inverse());
  CHECK_THROWS(Cyclo::zeta(3) + Cyclo::zeta(5));

  for (int d : {3, 4, 5, 7, 8}) {
    auto xs = corpus(d);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
        for (const auto& c : {xs[0], xs[1]}) {
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    CHECK(Cyclo::zeta(d).pow(d) == Cyclo(1));
    // Phi_d(zeta_d) = 0
    const auto& phi = cyclotomic_polynomial(d);
    Cyclo acc;
    for (std::size_t i = 0; i < phi.size(); ++i) acc = acc + Cyclo(phi[i]) * Cyclo::zeta(d, static_cast<long>(i));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("print and parse round trip") {
  CHECK(Cyclo::parse("1/2 - 3*z^2", 5).str() == "1/2 - 3*z^2");
  CHECK(Cyclo::parse("z", 4).str() == "z");
  CHECK(Cyclo::parse("-z + 2", 4) == Cyclo(2) - Cyclo::zeta(4));
  CHECK(Cyclo::parse("z^3", 3) == Cyclo(1));
  CHECK(Cyclo::parse("7", 3) == Cyclo(7));
  CHECK_THROWS(Cyclo::parse("2*", 3));
  CHECK_THROWS(Cyclo::parse("", 3));
  for (int d : {3, 5, 8})
    for (const auto& x : corpus(d)) CHECK(Cyclo::parse(x.str(), d) == x);
}

TEST_CASE("matrix minimal polynomial and diagonalizability") {
  using M = Matrix<Cyclo>;
  M id = M::identity(3);
  CHECK(minimal_polynomial(id) == Poly<Cyclo>(std::vector<Cyclo>{Cyclo(-1), Cyclo(1)}));
  CHECK(is_diagonalizable(id));

  M jordan(2, 2);
  jordan(0, 1) = 1;
  CHECK(minimal_polynomial(jordan) == Poly<Cyclo>::monomial(2));
  CHECK_FALSE(is_diagonalizable(jordan));

  Cyclo z = Cyclo::zeta(3);
  M dg = M::diagonal({Cyclo(1), z});
  Poly<Cyclo> expect = Poly<Cyclo>::linear_root(Cyclo(1)) * Poly<Cyclo>::linear_root(z);
  CHECK(minimal_polynomial(dg) == expect);
  CHECK(is_diagonalizable(dg));

  // p(M) = 0 and powers agree with iterated products
  for (int s = 0; s < 6; ++s) {
    M m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Cyclo((i * 3 + j * s + s) % 4 - 1) + (i == j ? z : Cyclo(0));
    CHECK(evaluate(minimal_polynomial(m), m).is_zero());
    M naive = M::identity(3);
    for (int e = 0; e < 7; ++e) naive = naive * m;
    CHECK(power(m, 7) == naive);
    if (auto inv = inverse(m)) CHECK(*inv * m == M::identity(3));
  }
  M sing(2, 2);
  sing(0, 0) = 1;
  CHECK_FALSE(inverse(sing).has_value());
  CHECK_THROWS(power(sing, -1));
}
