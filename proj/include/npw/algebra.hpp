#pragma once

#include "npw/basis.hpp"
#include "npw/report.hpp"
#include "npw/structure.hpp"

#include <vector>

namespace npw {

/// Block generators on the doubled space:
///   J^mu = diag(h^mu, h^mu),  K^mu = diag(+i h^mu, -i h^mu),
///   P^(+)mu upper block c_+ h^mu,  P^(-)mu lower block c_- h^mu.
/// A valid translation family has exactly one of c_plus, c_minus nonzero;
/// eps_p records which.
struct GeneratorSet2N {
  int n = 0;
  int eps_p = +1;
  Complex c_plus{0.0, 0.0};
  Complex c_minus{0.0, 0.0};
  std::vector<ComplexMatrix> j2n;
  std::vector<ComplexMatrix> k2n;
  std::vector<ComplexMatrix> p_plus;
  std::vector<ComplexMatrix> p_minus;

  int dim() const { return n * n; }
  const std::vector<ComplexMatrix>& momenta() const {
    return eps_p > 0 ? p_plus : p_minus;
  }
  Complex momentum_constant() const { return eps_p > 0 ? c_plus : c_minus; }
};

GeneratorSet2N build_2n_generators(const HermitianBasis& basis, int eps_p,
                                   Complex c = Complex(1.0, 0.0));

/// Generators on N^2-dimensional spacetime, populated entrywise from the
/// structure constants:
///   j^lambda(mu,nu) = i f^{mu lambda nu},
///   k^lambda(mu,nu) = -eps_p i d^{mu lambda nu}.
struct GeneratorSetN2 {
  int n = 0;
  int eps_p = +1;
  std::vector<ComplexMatrix> j;
  std::vector<ComplexMatrix> k;

  int dim() const { return n * n; }
};

GeneratorSetN2 build_n2_generators(const StructureConstants& sc, int eps_p);

/// All six commutator families on the 2N-rep:
///   [J,J] = ifJ, [J,K] = ifK, [K,K] = -ifJ,
///   [P,J] = ifP, [P,K] = -eps_p i d P, [P,P] = 0.
VerificationReport verify_poincare_weyl(const GeneratorSet2N& g, const StructureConstants& sc,
                                        double tol = kDefaultTol);

/// The [j,j], [j,k], [k,k] families on the N^2-rep.
VerificationReport verify_lorentz_weyl(const GeneratorSetN2& g, const StructureConstants& sc,
                                       double tol = kDefaultTol);

/// Read the N^2-dim generators back off the 2N-rep: for A in {J^nu, K^nu},
/// solve [P^mu, A] = sum_sigma coeff(mu,sigma) P^sigma by expanding the
/// momentum block in the hermitian basis. The result must match
/// build_n2_generators; a residual above `tol` means the commutator left
/// the momentum span and the generator set is malformed.
GeneratorSetN2 extract_copycat(const GeneratorSet2N& g, const HermitianBasis& basis,
                               double tol = kDefaultTol);

}  // namespace npw
