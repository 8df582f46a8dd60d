#pragma once

#include "npw/algebra.hpp"

#include <array>

namespace npw {

/// Rotation angles and boost parameters, one per flat basis index.
struct TransformParams {
  RealVector theta;
  RealVector phi;
  int eps_p = +1;
};

/// A point of N^2-dimensional spacetime; component N^2 (0-based: last) is
/// the time coordinate x^t.
struct Event {
  RealVector x;

  int dim() const { return static_cast<int>(x.size()); }
};

/// Squared interval: sum over spatial components of x^2 minus time^2.
double spacetime_interval(const Event& e);

/// D(theta, phi) = exp(i phi.k) exp(i theta.j): a rotation followed by a
/// boost. The exponents are real matrices, so D is real; the imaginary
/// residue is checked against `tol` and dropped.
RealMatrix build_transform(const GeneratorSetN2& g, const TransformParams& p,
                           double tol = kDefaultTol);

Event transform_event(const RealMatrix& d, const Event& e);

struct InvarianceResiduals {
  double distance = 0.0;
  double time = 0.0;
};

/// Finite-rotation invariance of spatial distance and of the time
/// coordinate (boost parameters all zero).
InvarianceResiduals rotation_invariance_check(const GeneratorSetN2& g, const RealVector& theta,
                                              const Event& e, double tol = kDefaultTol);

/// First-order change of the squared interval under an infinitesimal boost:
///   2 eps_p sum_rho dphi_rho (sum_{i,j spatial} d^{i rho j} x^i x^j
///                             - d^{t rho t} (x^t)^2).
double interval_first_order_change(const StructureConstants& sc, const RealVector& dphi,
                                   const Event& e, int eps_p);

/// Flat indices of the embedded 3+1 subspace
/// {h^{+,12}, h^{-,12}, h^{0,22}, h^{0,11}} (the last one is the time index).
std::array<int, 4> subspace_indices(int n);

/// The offending first-order term for an event supported on the 3+1
/// subspace and boosts along its three spatial directions; the contract is
/// that it vanishes. Throws when the support restriction is violated.
double subspace_invariance_check(const StructureConstants& sc, const Event& e,
                                 const Eigen::Vector3d& dphi_xyz, int eps_p);

/// Interval drift |interval'^2 - interval^2| under a FINITE boost along the
/// subspace spatial directions. Reported for inspection only: the
/// vanishing claim is first-order, so this carries no pass/fail contract.
double subspace_finite_boost_interval_drift(const GeneratorSetN2& g, const Event& e,
                                            const Eigen::Vector3d& phi_xyz,
                                            double tol = kDefaultTol);

/// Finite-parameter tensor/vector covariance of the momentum matrices:
///   exp(-i theta.J_2N) P^mu exp(+i theta.J_2N)
///     = sum_rho [exp(+i theta.j_N2)](mu,rho) P^rho
/// for rotations, and the same statement with K and k for boosts.
VerificationReport covariance_check(const GeneratorSet2N& g2n, const GeneratorSetN2& gn2,
                                    const TransformParams& p, double tol = 1e-9);

}  // namespace npw
