#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twocat/bimodule.hpp"
#include "twocat/cells.hpp"
#include "twocat/center.hpp"
#include "twocat/ideal.hpp"

namespace twocat {

// Indecomposable 1-morphisms of the ideal 2-category of a tree algebra: the
// nonzero ideals whose bimodule is indecomposable. The unit ideal is included.
std::vector<Ideal> indecomposable_one_morphisms(const AlgebraPtr& a);

// Cells computed from tensor products and Krull-Schmidt decompositions.
// Throws std::logic_error when a summand matches no listed indecomposable.
CellStructure cells_DA(const AlgebraPtr& a);

struct SimpleTransitiveDA {
  Ideal ideal;                   // indecomposable and idempotent
  std::vector<Ideal> morphisms;  // the indecomposables, in the order of `character`
  std::vector<int> character;    // [J o I] on the cell representation: 1 iff J (x) I = I
  std::vector<Ideal> stabilizer;
};

// One entry per indecomposable idempotent ideal. Each character is computed
// from tensor products and compared with JI = I and with I inside J; a
// mismatch, or two entries with equal stabilizers, throws std::logic_error.
std::vector<SimpleTransitiveDA> classify_simple_transitive_DA(const AlgebraPtr& a);

// The idempotent representative K_of(I) of the cell representation of I.
// Throws std::logic_error if the stabilizers of I and K_of(I) differ.
Ideal cell_rep_canonical(const Ideal& i);

// a.m : A (x) M -> M and m.a : M (x) A -> M on quotient bases, where the
// tensor products were formed with identity_bimodule(a).
Matrix<Rational> left_unitor(const AlgebraPtr& a, const TensorProduct<Rational>& tp, const Bimodule<Rational>& m);
Matrix<Rational> right_unitor(const AlgebraPtr& a, const TensorProduct<Rational>& tp, const Bimodule<Rational>& m);

struct CenterWitnessDA {
  Ideal ideal, witness;
  Ideal ij, ji;                // products in both orders
  bool bimodules_differ = false;  // I (x) J and J (x) I are not isomorphic
};

struct UnitScalarDA {
  Ideal ideal;
  std::size_t hom_dim = 0;     // dim Hom(A (x) J, J (x) A)
  std::optional<Rational> k;   // forced scalar, if the system is consistent
  bool unique = false;         // the scalar is determined
  bool matches_unit = false;   // k times the Hom generator is the unit isomorphism
};

struct CenterReportDA {
  std::vector<CenterWitnessDA> witnesses;
  std::vector<Ideal> counterexamples;  // indecomposable I != A commuting with all ideals
  std::vector<UnitScalarDA> unit_scalars;
  std::size_t unit_end_dim = 0;        // End((1, e)) inside the center

  bool ok() const;
};

CenterReportDA center_DA(const AlgebraPtr& a);

// F = A + ... + A (copies of the identity) with the componentwise unit
// isomorphisms, one datum per indecomposable K.
std::vector<SplitDatum> unit_direct_sum_data(const AlgebraPtr& a, int copies);

}  // namespace twocat
