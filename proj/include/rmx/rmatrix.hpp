#pragma once

#include "rmx/rep.hpp"

namespace rmx {

// scalar block factor  sign * q^{-sum(poles)} * prod_a (1 - q^a z)/(1 - q^{-a} z)
struct FScalar {
  int sign = 1;
  std::vector<int> poles;
  RatZ to_ratz() const;
  Scalar at_zero() const;                  // sign * q^{-sum}
  RatFunc<RadQ> rational(int usub) const;  // q -> 1 limit after z = q^{usub * u}
};

struct BlockSpec {
  Weight lambda;
  FScalar f;
  int flip_sign; // eigenvalue of the flip on the q->1 limit of the block
};

// the printed decomposition data (multiplicity-one blocks; E8's two
// multiplicity blocks are handled by E8Data below)
std::vector<BlockSpec> block_table(Series s, int rank);
int rational_usub(Series s); // z = q^{usub u} in the rational limit

// R-matrix in matrix units on the tensor square (not available for E8)
SpMat<RatZ> build_matrix_units(Series s, int rank);

// projector form: exact projectors from the module plus the printed factors
struct ProjectorForm {
  const RepModule* V;
  std::vector<BlockSpec> blocks;
  std::vector<SubmoduleBasis<Scalar>> bases;
  std::vector<SpMat<Scalar>> P;
  SpMat<RatZ> assemble() const;
};
ProjectorForm build_projector_form(Series s, int rank);

// rational (q -> 1) form over constants with square roots
struct RationalForm {
  int dim;
  std::vector<BlockSpec> blocks;
  std::vector<RatFunc<RadQ>> f;   // per block, in u
  std::vector<SpMat<RadQ>> P;     // classical projectors
  SpMat<RatFunc<RadQ>> assemble() const;
};
RationalForm build_rational(Series s, int rank);

// generic intertwiner solver: the unique X(z) with
//   X Delta_{V(z),W}(x) = Delta_{W,V(z)}(x) X  for x in {E_i, F_i, i in I~},
// normalized to 1 on the product of highest-weight vectors. deg_hint bounds
// the rational degree per entry (escalated internally up to 4x).
SpMat<RatZ> solve_intertwiner(const RepModule& V, const RepModule& W, int deg_hint);

// f_nu(0) check against the flip sign and Casimir values
struct R0Report {
  bool ok = true;
  std::string detail;
};
R0Report check_r0(Series s, int rank);

// the appendix bases w_s = sum sigma_{ij} v_i (x) v_j of the submodules used
// by the matrix-unit template, with mirrors expanded (full ordered lists)
struct UnitVectorSet {
  std::vector<std::pair<int, int>> pairs; // 1-based
  std::vector<Scalar> coeff;
};
std::vector<UnitVectorSet> unit_basis_sets(Series s, int rank, const Weight& lambda);

// ---- E8 ----

struct E8Data {
  Scalar alpha, beta, gamma, a, b, zeta, xi, eta, rho;
  // f matrices as 3x3 / 2x2 polynomial matrices in z
  std::vector<std::vector<PolyZ>> f_omega1, f_omega0;
  // normalized block matrices g = prefactor * f / denominators
  std::vector<std::vector<RatZ>> g1() const;
  std::vector<std::vector<RatZ>> g2() const;
  // printed rational limits
  std::vector<std::vector<RatFunc<RadQ>>> g1_rational() const;
  std::vector<std::vector<RatFunc<RadQ>>> g2_rational() const;
};
E8Data e8_data(bool flip_beta_gamma = false, bool flip_eta_rho = false);

struct E8SignReport {
  bool printed_beta_ok = false, flipped_beta_fails = false;
  bool printed_eta_ok = false, flipped_eta_fails = false;
};
// reproduces the sign determination through the E_0 commutation relation
E8SignReport e8_sign_fix();

// E8 singular-vector package (u_1, w_1 with the printed normalizations)
struct E8Singulars {
  SpVec<Scalar> u1, w1;   // in the 249^2 pair index space
  Scalar u1_norm, w1_norm;
};
const E8Singulars& e8_singular_vectors();

// matrix helpers
std::vector<std::vector<RatZ>> mat_mul(const std::vector<std::vector<RatZ>>& A,
                                       const std::vector<std::vector<RatZ>>& B);
std::vector<std::vector<RatZ>> mat_subst_invz(const std::vector<std::vector<RatZ>>& A);

// ---- denominator-cleared form (for the heavy verifications) ----

// prod over the type's pole exponents of (1 - q^{-a} z)
PolyZ units_common_den(Series s, int rank);
// N with R = N / D entrywise; throws if D is not a multiple of some entry's
// denominator. If D is null, a common denominator is computed from the
// normalized entries and returned through den_out.
SpMat<PolyZ> clear_denominator(const SpMat<RatZ>& R, const PolyZ* D, PolyZ* den_out = nullptr);

// z^M p(1/z) for a fixed reversal degree M >= deg p
PolyZ poly_reverse(const PolyZ& p, int M);
SpMat<PolyZ> mat_reverse(const SpMat<PolyZ>& N, int M);
// exact unitarity R(z) R(1/z) = Id through the cleared polynomial form
bool cleared_unitary(const SpMat<RatZ>& R, const PolyZ& D);

} // namespace rmx
