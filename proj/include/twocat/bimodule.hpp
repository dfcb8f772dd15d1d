#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "twocat/cyclo.hpp"
#include "twocat/ideal.hpp"
#include "twocat/matrix.hpp"
#include "twocat/quiver.hpp"

namespace twocat {

// Finite-dimensional A-A-bimodule. Every basis vector is homogeneous: it lies
// in e_u M e_v for u = left_vertex[i], v = right_vertex[i], so the vertex
// projectors are the diagonal 0/1 matrices read off from these labels.
// Maps and actions use the column convention: column j is the image of basis
// vector j.
template <class F>
struct Bimodule {
  std::shared_ptr<const Quiver> quiver;
  int relation_length = 0;  // paths of this length act as zero; 0 for none
  std::vector<std::string> labels;
  std::vector<int> left_vertex, right_vertex;
  std::vector<Matrix<F>> left, right;  // one per arrow

  std::size_t dim() const { return labels.size(); }
  Matrix<F> left_projector(int v) const;
  Matrix<F> right_projector(int v) const;
};

template <class F>
Bimodule<F> zero_bimodule(std::shared_ptr<const Quiver> q, int relation_length = 0);

// Empty when all bimodule axioms hold, otherwise one message per violation.
template <class F>
std::vector<std::string> validate(const Bimodule<F>& m);

template <class F>
bool is_bimodule_map(const Bimodule<F>& m, const Bimodule<F>& n, const Matrix<F>& f);

// Left/right action of a path: b.m and m.b.
template <class F>
Matrix<F> left_path_action(const Bimodule<F>& m, const Path& b);
template <class F>
Matrix<F> right_path_action(const Bimodule<F>& m, const Path& b);

template <class F>
struct DirectSum {
  Bimodule<F> module;
  std::vector<Matrix<F>> injections, projections;
};

template <class F>
DirectSum<F> direct_sum(const std::vector<Bimodule<F>>& parts);

// Sub-bimodule spanned by the given homogeneous vectors (columns), with the
// inclusion map. The vectors must span a sub-bimodule.
template <class F>
std::pair<Bimodule<F>, Matrix<F>> submodule(const Bimodule<F>& m, const std::vector<std::vector<F>>& vectors);

// Conjugate by an invertible grade-preserving change of basis p (new basis = columns of p).
template <class F>
Bimodule<F> change_basis(const Bimodule<F>& m, const Matrix<F>& p);

// M (x)_A N with the data needed to push maps through the quotient.
template <class F>
struct TensorProduct {
  Bimodule<F> module;
  std::size_t left_dim = 0, right_dim = 0;
  std::vector<int> formal_of;  // i * right_dim + j -> formal index, -1 if unbalanced
  std::vector<std::vector<std::pair<int, F>>> reduce;  // formal index -> coordinates
  std::vector<std::pair<int, int>> lift;               // basis vector -> (i, j)

  // Coordinates of the class of m_i (x) n_j.
  const std::vector<std::pair<int, F>>& project(int i, int j) const;
};

template <class F>
TensorProduct<F> tensor_full(const Bimodule<F>& m, const Bimodule<F>& n);

template <class F>
Bimodule<F> tensor(const Bimodule<F>& m, const Bimodule<F>& n) {
  return tensor_full(m, n).module;
}

// f (x) g : M (x) N -> M' (x) N' on quotient bases.
template <class F>
Matrix<F> tensor_map(const TensorProduct<F>& src, const TensorProduct<F>& dst, const Matrix<F>& f,
                     const Matrix<F>& g);

// (A (x) B) (x) C -> A (x) (B (x) C). ab_c is tensor_full(ab.module, C) and
// a_bc is tensor_full(A, bc.module).
template <class F>
Matrix<F> associator(const TensorProduct<F>& ab, const TensorProduct<F>& ab_c, const TensorProduct<F>& bc,
                     const TensorProduct<F>& a_bc);

template <class F>
std::vector<Matrix<F>> hom_basis(const Bimodule<F>& m, const Bimodule<F>& n);

template <class F>
struct EndAlgebra {
  std::vector<Matrix<F>> basis;
  std::vector<Matrix<F>> radical;
  std::vector<Matrix<F>> idempotents;  // complete, orthogonal, primitive
};

template <class F>
EndAlgebra<F> end_algebra(const Bimodule<F>& m);

// Radical of the algebra spanned by `algebra` (matrices acting faithfully),
// via the trace form.
template <class F>
std::vector<Matrix<F>> trace_radical(const std::vector<Matrix<F>>& algebra);

// e <- 3e^2 - 2e^3 until e^2 = e; throws after `bound` rounds.
template <class F>
Matrix<F> lift_idempotent(Matrix<F> e, std::size_t bound);

template <class F>
struct Summand {
  Bimodule<F> module;
  int multiplicity = 0;
  std::vector<Matrix<F>> inclusions;  // one per copy
};

template <class F>
std::vector<Summand<F>> decompose(const Bimodule<F>& m);

template <class F>
bool is_indecomposable(const Bimodule<F>& m);

// Some element of span(maps) is invertible. Decided on a grid of integer
// points of side greater than the determinant degree when that grid is small;
// returns nullopt when the grid would be too large and no point succeeded.
template <class F>
std::optional<bool> has_invertible_combination(const std::vector<Matrix<F>>& maps, std::size_t budget = 4096);

template <class F>
bool is_isomorphic(const Bimodule<F>& m, const Bimodule<F>& n);

// For modules with local endomorphism rings: some g o f is invertible.
template <class F>
bool is_isomorphic_indecomposable(const Bimodule<F>& m, const Bimodule<F>& n);

// Bimodules over the path algebra of a tree.
std::shared_ptr<const Quiver> quiver_of(const AlgebraPtr& a);
// J/I for I contained in J, on the paths of J outside I.
Bimodule<Rational> quotient_bimodule(const Ideal& j, const Ideal& i);
Bimodule<Rational> ideal_bimodule(const Ideal& i);
Bimodule<Rational> identity_bimodule(const AlgebraPtr& a);
// ^phi A for I generated by arrows; phi kills the arrows of I.
Bimodule<Rational> twisted_identity(const Ideal& i);

}  // namespace twocat
