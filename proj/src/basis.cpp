#include "npw/basis.hpp"

#include <cmath>

namespace npw {

std::string family_name(Family f) {
  switch (f) {
    case Family::plus: return "plus";
    case Family::minus: return "minus";
    case Family::diag: return "diag";
    case Family::time: return "time";
  }
  throw std::invalid_argument("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "plus") return Family::plus;
  if (name == "minus") return Family::minus;
  if (name == "diag") return Family::diag;
  if (name == "time") return Family::time;
  throw std::invalid_argument("family_from_name: unknown family '" + name + "'");
}

int HermitianBasis::index_of(const BasisLabel& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

double HermitianBasis::orthonormality_residual() const {
  const int d = dim();
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = mu; nu < d; ++nu) {
      const Complex t = 2.0 * (matrices[mu] * matrices[nu]).trace();
      const double expected = (mu == nu) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(t - expected));
    }
  }
  return worst;
}

HermitianBasis build_utility_basis(int n) {
  if (n < 1) {
    throw std::invalid_argument("build_utility_basis: n must be at least 1");
  }
  HermitianBasis basis;
  basis.n = n;
  basis.utility = true;

  // Symmetric pairs h^{+,ab} = (C^{ab} + C^{ba})/2, a < b.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(a - 1, b - 1) = 0.5;
      m(b - 1, a - 1) = 0.5;
      basis.matrices.push_back(std::move(m));
      basis.labels.push_back({Family::plus, a, b});
    }
  }
  // Antisymmetric pairs h^{-,ab} = -i (C^{ab} - C^{ba})/2, a < b.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(a - 1, b - 1) = Complex(0.0, -0.5);
      m(b - 1, a - 1) = Complex(0.0, 0.5);
      basis.matrices.push_back(std::move(m));
      basis.labels.push_back({Family::minus, a, b});
    }
  }
  // Traceless diagonal ladder h^{0,aa}, a = 2..N.
  for (int a = 2; a <= n; ++a) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    const double scale = 1.0 / std::sqrt(2.0 * (static_cast<double>(a) * a - a));
    for (int k = 1; k < a; ++k) m(k - 1, k - 1) = scale;
    m(a - 1, a - 1) = -(a - 1) * scale;
    basis.matrices.push_back(std::move(m));
    basis.labels.push_back({Family::diag, a, a});
  }
  // The time element h^{0,11} = 1/sqrt(2N), the only one with a trace.
  basis.matrices.push_back(ComplexMatrix::Identity(n, n) / std::sqrt(2.0 * n));
  basis.labels.push_back({Family::time, 1, 1});

  return basis;
}

HermitianBasis anti_rep(const HermitianBasis& basis) {
  HermitianBasis out;
  out.n = basis.n;
  out.labels = basis.labels;
  out.utility = false;
  out.matrices.reserve(basis.matrices.size());
  for (const auto& m : basis.matrices) {
    out.matrices.push_back((-m.transpose()).eval());
  }
  return out;
}

ComplexMatrix reconstruct_from_basis(const std::vector<double>& coeffs,
                                     const HermitianBasis& basis) {
  if (coeffs.size() != basis.matrices.size()) {
    throw std::invalid_argument("reconstruct_from_basis: coefficient count mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(basis.n, basis.n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * basis.matrices[i];
  return out;
}

namespace {

// Least-squares expansion over real coefficients: stack the real and
// imaginary parts of every matrix entry into one real system.
std::vector<double> expand_by_solve(const ComplexMatrix& a, const HermitianBasis& basis) {
  const int n = basis.n;
  const int d = basis.dim();
  RealMatrix system(2 * n * n, d);
  RealVector rhs(2 * n * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int row = 2 * (r * n + c);
      for (int sigma = 0; sigma < d; ++sigma) {
        system(row, sigma) = basis.matrices[sigma](r, c).real();
        system(row + 1, sigma) = basis.matrices[sigma](r, c).imag();
      }
      rhs(row) = a(r, c).real();
      rhs(row + 1) = a(r, c).imag();
    }
  }
  const RealVector beta = system.colPivHouseholderQr().solve(rhs);
  return {beta.data(), beta.data() + beta.size()};
}

}  // namespace

std::vector<double> expand_in_basis(const ComplexMatrix& a, const HermitianBasis& basis,
                                    double tol) {
  if (a.rows() != basis.n || a.cols() != basis.n) {
    throw std::invalid_argument("expand_in_basis: dimension mismatch");
  }
  const int d = basis.dim();
  std::vector<double> coeffs(d, 0.0);

  if (basis.is_orthonormal(1e-12)) {
    for (int sigma = 0; sigma < d; ++sigma) {
      const Complex beta = 2.0 * (a * basis.matrices[sigma]).trace();
      if (std::abs(beta.imag()) > tol) {
        throw ResidualError("expand_in_basis: imaginary coefficient residue above tolerance");
      }
      coeffs[sigma] = beta.real();
    }
  } else {
    coeffs = expand_by_solve(a, basis);
  }

  const double miss = max_abs((a - reconstruct_from_basis(coeffs, basis)).eval());
  if (miss > tol * std::max(1.0, max_abs(a))) {
    throw ResidualError("expand_in_basis: reconstruction residual above tolerance");
  }
  return coeffs;
}

BasisChange BasisChange::from_matrix(const RealMatrix& r, double tol) {
  if (r.rows() != r.cols()) {
    throw std::invalid_argument("BasisChange: matrix must be square");
  }
  Eigen::FullPivLU<RealMatrix> lu(r);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("BasisChange: matrix is singular");
  }
  BasisChange out{r, lu.inverse()};
  const double residual =
      max_abs(RealMatrix(out.r * out.r_inverse - RealMatrix::Identity(r.rows(), r.cols())));
  if (residual > std::max(tol, 1e-12)) {
    throw std::invalid_argument("BasisChange: matrix is numerically singular");
  }
  return out;
}

HermitianBasis apply_basis_change(const HermitianBasis& basis, const BasisChange& change) {
  const int d = basis.dim();
  if (change.r.rows() != d) {
    throw std::invalid_argument("apply_basis_change: R must be N^2 x N^2");
  }
  HermitianBasis out;
  out.n = basis.n;
  out.labels = basis.labels;
  out.utility = false;
  out.matrices.reserve(d);
  for (int mu = 0; mu < d; ++mu) {
    ComplexMatrix m = ComplexMatrix::Zero(basis.n, basis.n);
    for (int sigma = 0; sigma < d; ++sigma) {
      if (change.r(mu, sigma) != 0.0) m += change.r(mu, sigma) * basis.matrices[sigma];
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

}  // namespace npw
