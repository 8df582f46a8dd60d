#pragma once

#include "npw/linalg.hpp"

#include <string>
#include <vector>

namespace npw {

/// The four families of the utility basis: symmetric pairs h^{+,ab},
/// antisymmetric pairs h^{-,ab}, the traceless diagonal ladder h^{0,aa},
/// and the scaled identity h^{0,11} that plays the role of time.
enum class Family { plus, minus, diag, time };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct BasisLabel {
  Family family = Family::time;
  int a = 1;  // 1-based, as in the defining formulas
  int b = 1;

  bool operator==(const BasisLabel&) const = default;
};

/// Ordered basis of the N x N hermitian matrices. The flat ordering is
/// {h^{+,ab}} then {h^{-,ab}} (lexicographic in (a,b)), then the diagonal
/// ladder a = 2..N, then the time element, so h^t always sits at flat
/// index N^2 (0-based: n*n - 1).
struct HermitianBasis {
  int n = 0;
  std::vector<ComplexMatrix> matrices;
  std::vector<BasisLabel> labels;
  bool utility = false;  // true only for build_utility_basis output

  int dim() const { return n * n; }
  int time_index() const { return n * n - 1; }
  /// Flat position of a label, or -1 when absent.
  int index_of(const BasisLabel& label) const;
  /// Worst deviation from 2 tr(h^mu h^nu) = delta^{mu nu}.
  double orthonormality_residual() const;
  bool is_orthonormal(double tol = kDefaultTol) const {
    return orthonormality_residual() <= tol;
  }
};

HermitianBasis build_utility_basis(int n);

/// The basis of negative transposes (equivalently negative conjugates),
/// same ordering. Applying it twice returns the original exactly.
HermitianBasis anti_rep(const HermitianBasis& basis);

/// Real coefficients beta with a = sum_sigma beta_sigma h^sigma. Uses the
/// trace identity when the basis is orthonormal and a least-squares solve
/// otherwise. Throws ResidualError when the coefficients are not real or
/// the reconstruction misses (non-hermitian input, incomplete span).
std::vector<double> expand_in_basis(const ComplexMatrix& a, const HermitianBasis& basis,
                                    double tol = kDefaultTol);

ComplexMatrix reconstruct_from_basis(const std::vector<double>& coeffs,
                                     const HermitianBasis& basis);

/// Real invertible change of basis h'^mu = sum_sigma R(mu,sigma) h^sigma.
struct BasisChange {
  RealMatrix r;
  RealMatrix r_inverse;

  static BasisChange from_matrix(const RealMatrix& r, double tol = kDefaultTol);
};

/// Apply a basis change. The result keeps the positional labels but is no
/// longer flagged as the utility rep: the complete (anti)symmetry of the
/// structure constants is special to that rep.
HermitianBasis apply_basis_change(const HermitianBasis& basis, const BasisChange& change);

}  // namespace npw
