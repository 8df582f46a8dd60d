#pragma once

#include "npw/algebra.hpp"
#include "npw/basis.hpp"
#include "npw/report.hpp"
#include "npw/structure.hpp"

#include <vector>

namespace npw {

/// A rep of the Lorentz-Weyl relations built from two reps of the
/// fundamental commutators on the product space, pair index
/// r = dim_b*(a1-1) + b1:
///   J^mu = J_A^mu (x) 1 + 1 (x) J_B^mu,
///   K^mu = -i (J_A^mu (x) 1 - 1 (x) J_B^mu).
struct CombinedRep {
  int dim_a = 0;
  int dim_b = 0;
  std::vector<ComplexMatrix> j_ab;
  std::vector<ComplexMatrix> k_ab;

  int dim() const { return dim_a * dim_b; }
};

/// Build a combined rep. Both inputs must satisfy the fundamental
/// commutation relations [X^mu, X^nu] = i f^{mu nu sigma} X^sigma for the
/// given structure constants (checked to `tol` on entry), and the output
/// is verified against the Lorentz-Weyl relations before returning.
CombinedRep combine_reps(const std::vector<ComplexMatrix>& ja,
                         const std::vector<ComplexMatrix>& jb, const StructureConstants& sc,
                         double tol = kDefaultTol);

// Factor-rep catalog for combine_reps / the momentum solver.

/// One-dimensional rep with every generator zero.
std::vector<ComplexMatrix> trivial_rep(int n);
/// Negative transposes; turns a rep into its conjugate partner.
std::vector<ComplexMatrix> conjugate_rep(const std::vector<ComplexMatrix>& rep);
/// Restriction of the tensor square X (x) 1 + 1 (x) X to the symmetric
/// (dimension m(m+1)/2) or antisymmetric (dimension m(m-1)/2) subspace.
std::vector<ComplexMatrix> tensor_square_sym(const std::vector<ComplexMatrix>& rep);
std::vector<ComplexMatrix> tensor_square_antisym(const std::vector<ComplexMatrix>& rep);

/// Resolve a factor token: "fund", "antifund", "sym2", "antisym2",
/// "trivial", or any of those with a "bar-" prefix meaning the conjugate
/// of the named construction. Throws on unknown tokens.
std::vector<ComplexMatrix> named_factor_rep(const std::string& token,
                                            const HermitianBasis& basis);

/// The reorganization map S(lambda, sigma) = h^sigma(m, n) with
/// lambda = N(m-1)+n, conjugating the N^2-rep into Kronecker form:
///   S j^mu = (h^mu (x) 1 + 1 (x) hbar^mu) S
///   S k^mu = -i (h^mu (x) 1 - 1 (x) hbar^mu) S
/// For eps_p = -1 the reference basis and its anti-rep swap roles.
struct SimilarityMap {
  ComplexMatrix s;
  ComplexMatrix s_inverse;
};

SimilarityMap build_similarity(const HermitianBasis& basis, int eps_p = +1,
                               double tol = 1e-12);

/// Verify that the similarity identities survive a real invertible change
/// of basis: with primed constants f' = R R f R^-1 (same pattern for d),
/// primed generators built from them, primed basis h' = R h, and
/// S' = S R^-1, the same two identities hold.
VerificationReport basis_change_covariance(const HermitianBasis& basis,
                                           const BasisChange& change, int eps_p = +1,
                                           double tol = kDefaultTol);

enum class BlockSide { upper, lower };

/// Momentum matrices on the direct sum of two combined reps: every P^mu is
/// strictly off-block-diagonal on one side, and the off-diagonal blocks
/// solve the momentum rows of the algebra jointly over all mu.
struct MomentumSolution {
  int n = 0;
  int eps_p = +1;
  BlockSide side = BlockSide::upper;
  int dim_a = 0, dim_b = 0, dim_c = 0, dim_d = 0;
  int basis_dim = 0;
  /// One entry per nullspace basis vector; each entry is the list of N^2
  /// momentum matrices on the direct-sum space, unit Frobenius norm overall.
  std::vector<std::vector<ComplexMatrix>> solutions;
  /// Worst residual of the momentum commutation rows over all solutions.
  double max_relation_residual = 0.0;

  const std::vector<ComplexMatrix>& p_matrices() const { return solutions.at(0); }
};

/// Solve the linear system
///   [P^mu, J^nu] = i f^{mu nu sigma} P^sigma,
///   [P^mu, K^nu] = -eps_p i d^{mu nu sigma} P^sigma
/// over the free off-block entries of all N^2 momentum matrices at once,
/// restricted to the chosen block side. basis_dim = 0 means the rep pair
/// admits no momentum matrices. [P^mu, P^nu] = 0 holds identically for
/// single-side solutions.
MomentumSolution solve_momentum(const CombinedRep& rep_ab, const CombinedRep& rep_cd,
                                const StructureConstants& sc, int eps_p, BlockSide side,
                                double tol = kDefaultTol);

/// For a one-dimensional solution space, check that the S-rotated momentum
/// block factorizes as a product of two Clebsch-Gordan arrays: reshaped
/// over index groups (lambda_1, a, c) x (lambda_0, b, d) it must have
/// numerical rank one (sigma_2 / sigma_1 below `ratio_tol`).
VerificationReport cg_factorization_check(const MomentumSolution& sol, const SimilarityMap& s,
                                          double ratio_tol = 1e-8);

}  // namespace npw
