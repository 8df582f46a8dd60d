#pragma once

#include "npw/basis.hpp"
#include "npw/report.hpp"

#include <vector>

namespace npw {

/// Dense rank-3 tensors f and d over the flat basis index, defined by
///   [h^mu, h^lambda] = i f(mu,lambda,nu) h^nu
///   {h^mu, h^lambda} =   d(mu,lambda,nu) h^nu.
/// In the utility rep f is completely antisymmetric and d completely
/// symmetric; in a general rep only the (mu,lambda) (anti)symmetry holds.
struct StructureConstants {
  int n = 0;
  bool utility_rep = false;
  std::vector<double> f_data;
  std::vector<double> d_data;

  int dim() const { return n * n; }
  int time_index() const { return n * n - 1; }

  std::size_t idx(int mu, int lambda, int nu) const {
    const std::size_t d = static_cast<std::size_t>(dim());
    return (static_cast<std::size_t>(mu) * d + lambda) * d + nu;
  }
  double f(int mu, int lambda, int nu) const { return f_data[idx(mu, lambda, nu)]; }
  double d(int mu, int lambda, int nu) const { return d_data[idx(mu, lambda, nu)]; }
  double& f(int mu, int lambda, int nu) { return f_data[idx(mu, lambda, nu)]; }
  double& d(int mu, int lambda, int nu) { return d_data[idx(mu, lambda, nu)]; }
};

/// Extract f and d through the trace identity
///   f^{mu lambda nu} = -2i tr([h^mu, h^lambda] h^nu),
///   d^{mu lambda nu} =  2  tr({h^mu, h^lambda} h^nu).
/// Requires an orthonormal basis; throws NonOrthonormalBasisError otherwise
/// (callers must then expand through expand_in_basis instead). Closure and
/// realness are checked to `tol` before returning.
StructureConstants compute_structure_constants(const HermitianBasis& basis,
                                               double tol = kDefaultTol);

/// f^{mu t nu} = 0 and d^{mu t nu} = sqrt(2/N) delta^{mu nu}.
VerificationRecord verify_time_index(const StructureConstants& sc, double tol = kDefaultTol);

/// Complete antisymmetry of f and complete symmetry of d over all six
/// permutations of each index triple (utility rep only).
VerificationRecord verify_symmetries(const StructureConstants& sc, double tol = kDefaultTol);

}  // namespace npw
