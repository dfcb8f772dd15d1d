#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twocat/bimodule.hpp"
#include "twocat/cyclo.hpp"
#include "twocat/matrix.hpp"
#include "twocat/mpoly.hpp"

namespace twocat {

using CMatrix = Matrix<Cyclo>;

// D = Q(zeta_d)[x]/(x^k) with phi_i(x) = zeta^i x.
struct TruncParams {
  int k = 2, d = 2;

  TruncParams(int k, int d);
  Cyclo zeta(long power = 1) const { return Cyclo::zeta(d, power); }
  int index(long i) const { return static_cast<int>(((i % d) + d) % d); }
  // (1, zeta, ..., zeta^(k-1))
  std::vector<Cyclo> zeta_vector() const;
};

// A 2-morphism F_source -> F_target: sum_t coeffs[t] q^t when the indices
// agree, coeffs[0] p_{source,target} otherwise.
struct TruncMorphism {
  int source = 0, target = 0;
  std::vector<Cyclo> coeffs;

  static TruncMorphism zero(const TruncParams& t, long i, long j);
  static TruncMorphism identity(const TruncParams& t, long i);
  static TruncMorphism q(const TruncParams& t, long i, int power = 1);
  static TruncMorphism p(const TruncParams& t, long i, long j);

  bool is_endo() const { return source == target; }
  bool is_zero() const;
  TruncMorphism operator+(const TruncMorphism& o) const;
  TruncMorphism scaled(const Cyclo& c) const;
  bool operator==(const TruncMorphism& o) const;
  bool operator!=(const TruncMorphism& o) const { return !(*this == o); }
  std::string str() const;
};

// Upper triangular Toeplitz matrix with first row b.
CMatrix toeplitz(const std::vector<Cyclo>& b);

// Matrices in the standard basis 1, x, ..., x^(k-1), acting on rows: the
// composite g o1 f has matrix M_f * M_g.
CMatrix row_matrix(const TruncParams& t, const TruncMorphism& f);
// Throws std::invalid_argument when m is not in Hom(F_source, F_target).
TruncMorphism from_row_matrix(const TruncParams& t, int source, int target, const CMatrix& m);

TruncMorphism vertical(const TruncParams& t, const TruncMorphism& g, const TruncMorphism& f);  // g o1 f
TruncMorphism whisker_left(const TruncParams& t, long l, const TruncMorphism& g);                // id_{F_l} o0 g
TruncMorphism whisker_right(const TruncParams& t, const TruncMorphism& f, long l);               // f o0 id_{F_l}
// f o0 g : F_j o F_i -> F_j' o F_i' for f : F_j -> F_j', g : F_i -> F_i',
// computed as (id_{F_j'} o0 g) o1 (f o0 id_{F_i}).
TruncMorphism horizontal(const TruncParams& t, const TruncMorphism& f, const TruncMorphism& g);

// The bimodule {}^{phi_i}D over the loop quiver with x^k = 0.
Bimodule<Cyclo> twisted_D(const TruncParams& t, long i);

struct HomTrunc {
  int source = 0, target = 0;
  std::vector<TruncMorphism> basis;
  std::size_t engine_dim = 0;  // hom_basis on the twisted bimodules
  bool engine_agrees = false;  // same dimension, and every basis map is a bimodule map
};

HomTrunc hom_trunc(const TruncParams& t, long i, long j);

// f (x) g on {}^{phi_j}D (x) {}^{phi_i}D, transported to {}^{phi_{i+j}}D along
// the isomorphisms sending the class of 1 (x) 1 to 1; result in rows.
CMatrix horizontal_by_tensor(const TruncParams& t, const TruncMorphism& f, const TruncMorphism& g);

struct HorizontalOracleReport {
  int k = 0, d = 0;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty() && checks > 0; }
};

// Whiskerings of every generator by every F_l, and f o0 g for every pair of
// generators, against horizontal_by_tensor.
HorizontalOracleReport horizontal_oracle(const TruncParams& t);

// Every generator (identity, q^s, p) with source and target in 0..d-1.
std::vector<TruncMorphism> generators(const TruncParams& t);

struct QuiverArrowQD {
  int from = 0, to = 0;
  std::string label;
  TruncMorphism map;  // F_to -> F_from
};

struct QuiverQD {
  int k = 0, d = 0;
  std::vector<QuiverArrowQD> loops, arrows;
  std::size_t length_two_paths = 0, zero_length_two_paths = 0;
  std::vector<std::string> failed_relations;

  bool ok() const { return failed_relations.empty(); }
  std::string dot() const;
};

QuiverQD quiver_QD(const TruncParams& t);

// Decategorified action of F_0..F_{d-1} on the cosets of the subgroup of Z_d
// generated by r.
struct VrAction {
  int d = 0, r = 0;
  std::vector<std::vector<std::vector<int>>> matrices;  // [F_i]
  bool transitive = false;                              // sum of all [F_i] is positive
  bool periodic = false;                                // [F_d] = 1
};

VrAction simple_transitive_Vr(int d, int r);

// (D_zeta M_a)^d = 1. Throws std::invalid_argument unless a has length k and a_0 = 1.
bool center_condition(const TruncParams& t, const std::vector<Cyclo>& a);
bool center_condition_diagonalizable(const TruncParams& t, const std::vector<Cyclo>& a);

// Basis of { l : D_zeta M_aphi M_l = M_l D_zeta M_apsi }.
std::vector<std::vector<Cyclo>> center_hom(const TruncParams& t, const std::vector<Cyclo>& aphi,
                                           const std::vector<Cyclo>& apsi);

// s copies of F_0 with Phi(F_1) = (M_{a_pq}); diagonal vectors lead with 1,
// off-diagonal ones with 0.
struct CenterObject {
  std::vector<std::vector<std::vector<Cyclo>>> blocks;  // blocks[p][q]

  std::size_t copies() const { return blocks.size(); }
  CMatrix matrix(const TruncParams& t) const;  // throws on shape violations
};

CMatrix block_D(const TruncParams& t, std::size_t copies);
bool center_condition_block(const TruncParams& t, const CenterObject& phi);
bool center_condition_block_diagonalizable(const TruncParams& t, const CenterObject& phi);
// Block Toeplitz M_f (sk x tk) with D_s M_phi M_f = M_f D_t M_psi.
std::vector<CMatrix> center_hom_block(const TruncParams& t, const CenterObject& phi, const CenterObject& psi);

struct CenterFreeD2 {
  int k = 0;
  std::vector<int> free;                 // indices j of a_j
  std::map<int, MPoly> determined;       // a_j in terms of the free ones (variables a_1..a_{k-1})
  bool identity_after_substitution = false;
};

// d = 2: solve (D_zeta M_a)^2 = 1 for a_1..a_{k-1} by triangular elimination.
CenterFreeD2 enumerate_center_d2(int k);

// One candidate first component F_{i_1} + ... + F_{i_s} of a center object.
struct GuardCase {
  std::vector<int> indices;
  bool solvable = false;        // naturality along q_1 and the p-maps has a solution
  bool identity_solves = false;  // Phi(F_1) = 1 satisfies the constraints
  bool q_kills_diagonal = false;  // for a single F_i, i != 0: q_1 alone forces a_0 = 0
};

struct GuardReport {
  int k = 0, d = 0;
  std::vector<GuardCase> cases;
  std::vector<std::string> unexpected;

  bool ok() const { return unexpected.empty(); }
};

// All index multisets of size 1 and 2 over 0..d-1.
GuardReport center_classification_guard(const TruncParams& t);

// Phi(F_s) for s = 0..d built from Phi(F_1) = M_a by the hexagon recursion
// Phi(F_s) = (id_{F_1} o0 Phi(F_{s-1})) o1 (Phi(F_1) o0 id_{F_{s-1}}).
std::vector<CMatrix> reconstruct_phi(const TruncParams& t, const std::vector<Cyclo>& a);
// D^-s (D M_a)^s
CMatrix phi_closed(const TruncParams& t, const std::vector<Cyclo>& a, int s);

// Deterministic vectors with a_0 = 1: small random entries, plus vectors of the
// form a = first row of D^-1 M_b^-1 D M_b, which always satisfy the condition.
std::vector<std::vector<Cyclo>> center_corpus(const TruncParams& t, std::size_t count, std::uint32_t seed);

// Comma-separated scalars; errors name the entry and its column.
std::vector<Cyclo> parse_cyclo_vector(const std::string& csv, int d);
std::string format_cyclo_vector(const std::vector<Cyclo>& v);

}  // namespace twocat
