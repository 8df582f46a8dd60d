#include "npw/structure.hpp"

#include <cmath>

namespace npw {

StructureConstants compute_structure_constants(const HermitianBasis& basis, double tol) {
  if (!basis.is_orthonormal(1e-12)) {
    throw NonOrthonormalBasisError(
        "compute_structure_constants: basis is not orthonormal; trace extraction is "
        "invalid, expand commutators with expand_in_basis instead");
  }
  const int d = basis.dim();
  StructureConstants sc;
  sc.n = basis.n;
  sc.utility_rep = basis.utility;
  sc.f_data.assign(static_cast<std::size_t>(d) * d * d, 0.0);
  sc.d_data.assign(static_cast<std::size_t>(d) * d * d, 0.0);

  double closure = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int lambda = 0; lambda < d; ++lambda) {
      const ComplexMatrix comm = commutator(basis.matrices[mu], basis.matrices[lambda]);
      const ComplexMatrix anti = anticommutator(basis.matrices[mu], basis.matrices[lambda]);
      ComplexMatrix comm_rebuilt = ComplexMatrix::Zero(basis.n, basis.n);
      ComplexMatrix anti_rebuilt = ComplexMatrix::Zero(basis.n, basis.n);
      for (int nu = 0; nu < d; ++nu) {
        const Complex fv = -2.0 * Complex(0.0, 1.0) * (comm * basis.matrices[nu]).trace();
        const Complex dv = 2.0 * (anti * basis.matrices[nu]).trace();
        if (std::abs(fv.imag()) > tol || std::abs(dv.imag()) > tol) {
          throw ResidualError(
              "compute_structure_constants: imaginary residue above tolerance");
        }
        sc.f(mu, lambda, nu) = fv.real();
        sc.d(mu, lambda, nu) = dv.real();
        comm_rebuilt += Complex(0.0, fv.real()) * basis.matrices[nu];
        anti_rebuilt += dv.real() * basis.matrices[nu];
      }
      closure = std::max(closure, max_abs((comm - comm_rebuilt).eval()));
      closure = std::max(closure, max_abs((anti - anti_rebuilt).eval()));
    }
  }
  if (closure > tol) {
    throw ResidualError("compute_structure_constants: closure residual above tolerance");
  }
  return sc;
}

VerificationRecord verify_time_index(const StructureConstants& sc, double tol) {
  const int d = sc.dim();
  const int t = sc.time_index();
  const double expected = std::sqrt(2.0 / sc.n);
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      worst = std::max(worst, std::abs(sc.f(mu, t, nu)));
      const double want = (mu == nu) ? expected : 0.0;
      worst = std::max(worst, std::abs(sc.d(mu, t, nu) - want));
    }
  }
  return VerificationRecord::make("structure/time-index", worst, tol);
}

VerificationRecord verify_symmetries(const StructureConstants& sc, double tol) {
  const int d = sc.dim();
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int la = 0; la < d; ++la) {
      for (int nu = 0; nu < d; ++nu) {
        const double f0 = sc.f(mu, la, nu);
        const double d0 = sc.d(mu, la, nu);
        // Even permutations must match, odd ones flip f and keep d.
        const double checks[] = {
            std::abs(sc.f(la, nu, mu) - f0), std::abs(sc.f(nu, mu, la) - f0),
            std::abs(sc.f(la, mu, nu) + f0), std::abs(sc.f(mu, nu, la) + f0),
            std::abs(sc.f(nu, la, mu) + f0), std::abs(sc.d(la, nu, mu) - d0),
            std::abs(sc.d(nu, mu, la) - d0), std::abs(sc.d(la, mu, nu) - d0),
            std::abs(sc.d(mu, nu, la) - d0), std::abs(sc.d(nu, la, mu) - d0)};
        for (double c : checks) worst = std::max(worst, c);
      }
    }
  }
  return VerificationRecord::make("structure/symmetries", worst, tol);
}

}  // namespace npw
