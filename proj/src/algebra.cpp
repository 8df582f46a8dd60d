#include "npw/algebra.hpp"

#include <cmath>
#include <functional>

namespace npw {

namespace {

void check_eps(int eps_p) {
  if (eps_p != 1 && eps_p != -1) {
    throw std::invalid_argument("eps_p must be +1 or -1");
  }
}

}  // namespace

GeneratorSet2N build_2n_generators(const HermitianBasis& basis, int eps_p, Complex c) {
  check_eps(eps_p);
  if (c == Complex(0.0, 0.0)) {
    throw std::invalid_argument("build_2n_generators: momentum constant c must be nonzero");
  }
  const int n = basis.n;
  const int d = basis.dim();
  const Complex i_unit(0.0, 1.0);

  GeneratorSet2N g;
  g.n = n;
  g.eps_p = eps_p;
  g.c_plus = eps_p > 0 ? c : Complex(0.0, 0.0);
  g.c_minus = eps_p > 0 ? Complex(0.0, 0.0) : c;

  for (int mu = 0; mu < d; ++mu) {
    const ComplexMatrix& h = basis.matrices[mu];
    ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
    j.topLeftCorner(n, n) = h;
    j.bottomRightCorner(n, n) = h;
    ComplexMatrix k = ComplexMatrix::Zero(2 * n, 2 * n);
    k.topLeftCorner(n, n) = i_unit * h;
    k.bottomRightCorner(n, n) = -i_unit * h;
    ComplexMatrix pp = ComplexMatrix::Zero(2 * n, 2 * n);
    pp.topRightCorner(n, n) = g.c_plus * h;
    ComplexMatrix pm = ComplexMatrix::Zero(2 * n, 2 * n);
    pm.bottomLeftCorner(n, n) = g.c_minus * h;

    g.j2n.push_back(std::move(j));
    g.k2n.push_back(std::move(k));
    g.p_plus.push_back(std::move(pp));
    g.p_minus.push_back(std::move(pm));
  }
  return g;
}

GeneratorSetN2 build_n2_generators(const StructureConstants& sc, int eps_p) {
  check_eps(eps_p);
  const int d = sc.dim();
  GeneratorSetN2 g;
  g.n = sc.n;
  g.eps_p = eps_p;
  g.j.reserve(d);
  g.k.reserve(d);
  for (int lambda = 0; lambda < d; ++lambda) {
    ComplexMatrix j(d, d), k(d, d);
    for (int mu = 0; mu < d; ++mu) {
      for (int nu = 0; nu < d; ++nu) {
        j(mu, nu) = Complex(0.0, sc.f(mu, lambda, nu));
        k(mu, nu) = Complex(0.0, -eps_p * sc.d(mu, lambda, nu));
      }
    }
    g.j.push_back(std::move(j));
    g.k.push_back(std::move(k));
  }
  return g;
}

namespace {

// Worst residual of [A^mu, B^nu] = sum_sigma coeff(mu,nu,sigma) C^sigma.
double relation_residual(const std::vector<ComplexMatrix>& a,
                         const std::vector<ComplexMatrix>& b,
                         const std::vector<ComplexMatrix>& c,
                         const std::function<Complex(int, int, int)>& coeff) {
  const int d = static_cast<int>(a.size());
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      ComplexMatrix lhs = commutator(a[mu], b[nu]);
      for (int sigma = 0; sigma < d; ++sigma) {
        const Complex w = coeff(mu, nu, sigma);
        if (w != Complex(0.0, 0.0)) lhs -= w * c[sigma];
      }
      worst = std::max(worst, max_abs(lhs));
    }
  }
  return worst;
}

}  // namespace

VerificationReport verify_poincare_weyl(const GeneratorSet2N& g, const StructureConstants& sc,
                                        double tol) {
  if (g.n != sc.n) {
    throw std::invalid_argument("verify_poincare_weyl: dimension mismatch");
  }
  const Complex i_unit(0.0, 1.0);
  const double eps = g.eps_p;
  const auto& p = g.momenta();

  auto if_coeff = [&](int mu, int nu, int sigma) { return i_unit * sc.f(mu, nu, sigma); };
  auto neg_if_coeff = [&](int mu, int nu, int sigma) { return -i_unit * sc.f(mu, nu, sigma); };
  auto pk_coeff = [&](int mu, int nu, int sigma) {
    return -eps * i_unit * sc.d(mu, nu, sigma);
  };
  auto zero_coeff = [](int, int, int) { return Complex(0.0, 0.0); };

  VerificationReport report;
  report.add("poincare-weyl/JJ", relation_residual(g.j2n, g.j2n, g.j2n, if_coeff), tol);
  report.add("poincare-weyl/JK", relation_residual(g.j2n, g.k2n, g.k2n, if_coeff), tol);
  report.add("poincare-weyl/KK", relation_residual(g.k2n, g.k2n, g.j2n, neg_if_coeff), tol);
  report.add("poincare-weyl/PJ", relation_residual(p, g.j2n, p, if_coeff), tol);
  report.add("poincare-weyl/PK", relation_residual(p, g.k2n, p, pk_coeff), tol);
  report.add("poincare-weyl/PP", relation_residual(p, p, p, zero_coeff), tol);
  return report;
}

VerificationReport verify_lorentz_weyl(const GeneratorSetN2& g, const StructureConstants& sc,
                                       double tol) {
  if (g.n != sc.n) {
    throw std::invalid_argument("verify_lorentz_weyl: dimension mismatch");
  }
  const Complex i_unit(0.0, 1.0);
  auto if_coeff = [&](int mu, int nu, int sigma) { return i_unit * sc.f(mu, nu, sigma); };
  auto neg_if_coeff = [&](int mu, int nu, int sigma) { return -i_unit * sc.f(mu, nu, sigma); };

  VerificationReport report;
  report.add("lorentz-weyl/jj", relation_residual(g.j, g.j, g.j, if_coeff), tol);
  report.add("lorentz-weyl/jk", relation_residual(g.j, g.k, g.k, if_coeff), tol);
  report.add("lorentz-weyl/kk", relation_residual(g.k, g.k, g.j, neg_if_coeff), tol);
  return report;
}

GeneratorSetN2 extract_copycat(const GeneratorSet2N& g, const HermitianBasis& basis,
                               double tol) {
  if (g.n != basis.n) {
    throw std::invalid_argument("extract_copycat: dimension mismatch");
  }
  const int n = g.n;
  const int d = g.dim();
  const auto& p = g.momenta();
  const Complex c = g.momentum_constant();
  if (c == Complex(0.0, 0.0)) {
    throw std::invalid_argument("extract_copycat: generator set has no momentum family");
  }

  // Complex expansion coefficients of the active momentum block of
  // [P^mu, A^nu], read through the hermitian/antihermitian split.
  auto block_coefficients = [&](const ComplexMatrix& comm) {
    ComplexMatrix block = g.eps_p > 0 ? comm.topRightCorner(n, n).eval()
                                      : comm.bottomLeftCorner(n, n).eval();
    block /= c;
    const HermitianParts parts = hermitian_split(block);
    const ComplexMatrix anti_as_herm = Complex(0.0, -1.0) * parts.antihermitian;
    const std::vector<double> re = expand_in_basis(parts.hermitian, basis, tol);
    const std::vector<double> im = expand_in_basis(anti_as_herm, basis, tol);
    std::vector<Complex> out(d);
    for (int sigma = 0; sigma < d; ++sigma) out[sigma] = Complex(re[sigma], im[sigma]);

    ComplexMatrix rebuilt = ComplexMatrix::Zero(n, n);
    for (int sigma = 0; sigma < d; ++sigma) rebuilt += out[sigma] * basis.matrices[sigma];
    if (max_abs((block - rebuilt).eval()) > tol) {
      throw ResidualError("extract_copycat: commutator block outside the momentum span");
    }
    return out;
  };

  GeneratorSetN2 out;
  out.n = n;
  out.eps_p = g.eps_p;
  out.j.assign(d, ComplexMatrix::Zero(d, d));
  out.k.assign(d, ComplexMatrix::Zero(d, d));
  for (int nu = 0; nu < d; ++nu) {
    for (int mu = 0; mu < d; ++mu) {
      const auto jc = block_coefficients(commutator(p[mu], g.j2n[nu]));
      const auto kc = block_coefficients(commutator(p[mu], g.k2n[nu]));
      for (int sigma = 0; sigma < d; ++sigma) {
        out.j[nu](mu, sigma) = jc[sigma];
        out.k[nu](mu, sigma) = kc[sigma];
      }
    }
  }
  return out;
}

}  // namespace npw
