#include "npw/geometry.hpp"

#include <cmath>

namespace npw {

double spacetime_interval(const Event& e) {
  const int d = e.dim();
  double spatial = 0.0;
  for (int i = 0; i + 1 < d; ++i) spatial += e.x(i) * e.x(i);
  return spatial - e.x(d - 1) * e.x(d - 1);
}

RealMatrix build_transform(const GeneratorSetN2& g, const TransformParams& p, double tol) {
  const int d = g.dim();
  if (p.theta.size() != d || p.phi.size() != d) {
    throw std::invalid_argument("build_transform: parameter tuples must have length N^2");
  }
  const Complex i_unit(0.0, 1.0);
  ComplexMatrix rot_gen = ComplexMatrix::Zero(d, d);
  ComplexMatrix boost_gen = ComplexMatrix::Zero(d, d);
  for (int sigma = 0; sigma < d; ++sigma) {
    if (p.theta(sigma) != 0.0) rot_gen += i_unit * p.theta(sigma) * g.j[sigma];
    if (p.phi(sigma) != 0.0) boost_gen += i_unit * p.phi(sigma) * g.k[sigma];
  }
  const ComplexMatrix dmat = matrix_exp(boost_gen) * matrix_exp(rot_gen);
  const double imag_residue = max_abs(RealMatrix(dmat.imag()));
  if (imag_residue > tol) {
    throw ResidualError("build_transform: imaginary residue above tolerance");
  }
  return dmat.real();
}

Event transform_event(const RealMatrix& d, const Event& e) {
  if (d.cols() != e.x.size() || d.rows() != d.cols()) {
    throw std::invalid_argument("transform_event: dimension mismatch");
  }
  return Event{d * e.x};
}

InvarianceResiduals rotation_invariance_check(const GeneratorSetN2& g, const RealVector& theta,
                                              const Event& e, double tol) {
  const int d = g.dim();
  TransformParams p{theta, RealVector::Zero(d), g.eps_p};
  const Event moved = transform_event(build_transform(g, p, tol), e);

  double before = 0.0, after = 0.0;
  for (int i = 0; i + 1 < d; ++i) {
    before += e.x(i) * e.x(i);
    after += moved.x(i) * moved.x(i);
  }
  return {std::abs(after - before), std::abs(moved.x(d - 1) - e.x(d - 1))};
}

double interval_first_order_change(const StructureConstants& sc, const RealVector& dphi,
                                   const Event& e, int eps_p) {
  const int d = sc.dim();
  if (dphi.size() != d || e.x.size() != d) {
    throw std::invalid_argument("interval_first_order_change: dimension mismatch");
  }
  const int t = sc.time_index();
  double total = 0.0;
  for (int rho = 0; rho < d; ++rho) {
    if (dphi(rho) == 0.0) continue;
    double quad = 0.0;
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        quad += sc.d(i, rho, j) * e.x(i) * e.x(j);
      }
    }
    quad -= sc.d(t, rho, t) * e.x(t) * e.x(t);
    total += dphi(rho) * quad;
  }
  return 2.0 * eps_p * total;
}

std::array<int, 4> subspace_indices(int n) {
  if (n < 2) {
    throw std::invalid_argument("subspace_indices: requires n >= 2");
  }
  // h^{+,12} leads the plus family, h^{-,12} the minus family, h^{0,22}
  // the diagonal ladder; the time element is always last.
  const int pairs = n * (n - 1) / 2;
  return {0, pairs, 2 * pairs, n * n - 1};
}

double subspace_invariance_check(const StructureConstants& sc, const Event& e,
                                 const Eigen::Vector3d& dphi_xyz, int eps_p) {
  const int d = sc.dim();
  if (e.x.size() != d) {
    throw std::invalid_argument("subspace_invariance_check: dimension mismatch");
  }
  const auto idx = subspace_indices(sc.n);
  for (int i = 0; i < d; ++i) {
    const bool on_subspace =
        i == idx[0] || i == idx[1] || i == idx[2] || i == idx[3];
    if (!on_subspace && e.x(i) != 0.0) {
      throw std::invalid_argument(
          "subspace_invariance_check: event has support outside the 3+1 subspace");
    }
  }
  RealVector dphi = RealVector::Zero(d);
  for (int k = 0; k < 3; ++k) dphi(idx[k]) = dphi_xyz(k);
  return interval_first_order_change(sc, dphi, e, eps_p);
}

double subspace_finite_boost_interval_drift(const GeneratorSetN2& g, const Event& e,
                                            const Eigen::Vector3d& phi_xyz, double tol) {
  const int d = g.dim();
  if (e.x.size() != d) {
    throw std::invalid_argument("subspace_finite_boost_interval_drift: dimension mismatch");
  }
  const auto idx = subspace_indices(g.n);
  RealVector phi = RealVector::Zero(d);
  for (int k = 0; k < 3; ++k) phi(idx[k]) = phi_xyz(k);
  TransformParams p{RealVector::Zero(d), phi, g.eps_p};
  const Event moved = transform_event(build_transform(g, p, tol), e);
  return std::abs(spacetime_interval(moved) - spacetime_interval(e));
}

VerificationReport covariance_check(const GeneratorSet2N& g2n, const GeneratorSetN2& gn2,
                                    const TransformParams& p, double tol) {
  if (g2n.n != gn2.n || g2n.eps_p != gn2.eps_p) {
    throw std::invalid_argument("covariance_check: generator sets are inconsistent");
  }
  const int d = g2n.dim();
  if (p.theta.size() != d || p.phi.size() != d) {
    throw std::invalid_argument("covariance_check: parameter tuples must have length N^2");
  }
  const Complex i_unit(0.0, 1.0);
  const auto& momenta = g2n.momenta();

  auto family_residual = [&](const std::vector<ComplexMatrix>& big,
                             const std::vector<ComplexMatrix>& small,
                             const RealVector& params) {
    ComplexMatrix big_gen = ComplexMatrix::Zero(2 * g2n.n, 2 * g2n.n);
    ComplexMatrix small_gen = ComplexMatrix::Zero(d, d);
    for (int sigma = 0; sigma < d; ++sigma) {
      if (params(sigma) == 0.0) continue;
      big_gen += i_unit * params(sigma) * big[sigma];
      small_gen += i_unit * params(sigma) * small[sigma];
    }
    const ComplexMatrix left = matrix_exp((-big_gen).eval());
    const ComplexMatrix right = matrix_exp(big_gen);
    const ComplexMatrix vec_side = matrix_exp(small_gen);

    double worst = 0.0;
    for (int mu = 0; mu < d; ++mu) {
      ComplexMatrix tensor = left * momenta[mu] * right;
      for (int rho = 0; rho < d; ++rho) tensor -= vec_side(mu, rho) * momenta[rho];
      worst = std::max(worst, max_abs(tensor));
    }
    return worst;
  };

  VerificationReport report;
  report.add("covariance/rotation", family_residual(g2n.j2n, gn2.j, p.theta), tol);
  report.add("covariance/boost", family_residual(g2n.k2n, gn2.k, p.phi), tol);
  return report;
}

}  // namespace npw
