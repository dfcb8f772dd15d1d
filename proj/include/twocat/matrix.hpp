#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twocat/poly.hpp"
#include "twocat/scalar.hpp"

namespace twocat {

// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix diagonal(const std::vector<F>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix column(const std::vector<F>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<F> col(std::size_t j) const {
    std::vector<F> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const std::vector<F>& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }
  // Row-major flattening.
  const std::vector<F>& data() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!twocat::scalar_zero(x)) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const F& x = (*this)(i, k);
        if (twocat::scalar_zero(x)) continue;
        for (std::size_t j = 0; j < o.c_; ++j) {
          const F& y = o(k, j);
          if (!twocat::scalar_zero(y)) m(i, j) += x * y;
        }
      }
    return m;
  }
  std::vector<F> operator*(const std::vector<F>& v) const {
    if (c_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<F> w(r_, F(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const F& x = (*this)(i, k);
        if (!twocat::scalar_zero(x) && !twocat::scalar_zero(v[k])) w[i] += x * v[k];
      }
    return w;
  }
  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Matrix scaled(const F& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.r_; ++i)
      for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
    }
    os << "]";
    return os.str();
  }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<F> a_;
};

// Reduced row echelon form with the pivot column of each nonzero row.
template <class F>
struct Echelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    F inv = F(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

// Basis of {x : m x = 0}, one vector per free column, in increasing column order.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  Echelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with m x = b, or nothing when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  Echelon<F> e = row_reduce(aug);
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rref(r, m.cols());
  }
  return x;
}

template <class F>
F determinant(Matrix<F> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix<F> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<F>::identity(n));
  Echelon<F> e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
  return m.square() && rank(m) == m.rows();
}

// Repeated squaring; negative exponents invert first.
template <class F>
Matrix<F> power(const Matrix<F>& m, long e) {
  if (!m.square()) throw std::invalid_argument("power of non-square matrix");
  if (e < 0) {
    auto inv = inverse(m);
    if (!inv) throw std::domain_error("negative power of singular matrix");
    return power(*inv, -e);
  }
  Matrix<F> result = Matrix<F>::identity(m.rows()), base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// Monic minimal polynomial: the first linear dependency among I, m, m^2, ...
template <class F>
Poly<F> minimal_polynomial(const Matrix<F>& m) {
  if (!m.square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  std::size_t n = m.rows();
  std::size_t nn = n * n;
  std::vector<Matrix<F>> powers{Matrix<F>::identity(n)};
  for (std::size_t deg = 1; deg <= n; ++deg) {
    powers.push_back(powers.back() * m);
    // columns: flattened powers[0..deg-1]; right-hand side: powers[deg]
    Matrix<F> sys(nn, deg);
    for (std::size_t c = 0; c < deg; ++c)
      for (std::size_t i = 0; i < nn; ++i) sys(i, c) = powers[c].data()[i];
    auto x = solve(sys, powers[deg].data());
    if (x) {
      std::vector<F> coeffs(deg + 1, F(0));
      for (std::size_t c = 0; c < deg; ++c) coeffs[c] = -(*x)[c];
      coeffs[deg] = F(1);
      return Poly<F>(std::move(coeffs));
    }
  }
  throw std::logic_error("minimal polynomial degree exceeded matrix size");
}

// Over a field of characteristic zero: diagonalizable over the algebraic
// closure iff the minimal polynomial is squarefree.
template <class F>
bool is_diagonalizable(const Matrix<F>& m) {
  return is_squarefree(minimal_polynomial(m));
}

template <class F>
Matrix<F> evaluate(const Poly<F>& p, const Matrix<F>& m, const Matrix<F>& unit) {
  Matrix<F> acc(m.rows(), m.cols());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + unit.scaled(p.coeffs()[i]);
  return acc;
}

template <class F>
Matrix<F> evaluate(const Poly<F>& p, const Matrix<F>& m) {
  return evaluate(p, m, Matrix<F>::identity(m.rows()));
}

}  // namespace twocat
