#include "npw/linalg.hpp"

#include <cmath>

namespace npw {

ComplexMatrix hermitian_conjugate(const ComplexMatrix& m) { return m.adjoint(); }

HermitianParts hermitian_split(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_split: matrix must be square");
  }
  const ComplexMatrix dag = a.adjoint();
  return {(a + dag) / 2.0, (a - dag) / 2.0};
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_exp: matrix must be square");
  }
  const Eigen::Index dim = m.rows();
  if (dim == 0) return ComplexMatrix(0, 0);
  if (!is_finite(m)) {
    throw std::invalid_argument("matrix_exp: non-finite input");
  }

  // Scale until the infinity norm drops to 0.5, sum the series to machine
  // precision, then undo the scaling by repeated squaring.
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  for (double scaled = norm; scaled > 0.5; scaled /= 2.0) ++squarings;

  const ComplexMatrix x = m / std::ldexp(1.0, squarings);
  ComplexMatrix result = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix term = ComplexMatrix::Identity(dim, dim);
  for (int k = 1; k <= 40; ++k) {
    term = (term * x) / static_cast<double>(k);
    result += term;
    if (max_abs(term) < 1e-17 * std::max(1.0, max_abs(result))) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;

  if (!is_finite(result)) {
    throw ResidualError("matrix_exp: result overflowed (input norm too large)");
  }
  return result;
}

namespace {

enum class NullCut { relative, absolute };

// Two-sided Jacobi throughout: BDCSVD mis-ranks wide complex inputs of the
// kind the momentum solver produces (observed on Eigen 3.4), and rank
// decisions here must be exact.
std::vector<ComplexVector> nullspace_impl(const ComplexMatrix& m, double tol, NullCut cut) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  // Under the relative cut a zero matrix annihilates everything.
  const double threshold =
      cut == NullCut::absolute ? tol : (sigma_max == 0.0 ? 0.0 : tol * sigma_max);

  std::vector<ComplexVector> basis;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const double sigma = c < sv.size() ? sv(c) : 0.0;
    if (sigma <= threshold) basis.push_back(svd.matrixV().col(c));
  }
  return basis;
}

}  // namespace

std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol) {
  if (tol <= 0.0) {
    throw std::invalid_argument("nullspace: tol must be positive");
  }
  return nullspace_impl(m, tol, NullCut::relative);
}

std::vector<ComplexVector> nullspace_below(const ComplexMatrix& m, double abs_threshold) {
  if (abs_threshold < 0.0) {
    throw std::invalid_argument("nullspace_below: threshold must be non-negative");
  }
  return nullspace_impl(m, abs_threshold, NullCut::absolute);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_finite(const ComplexMatrix& m) { return m.allFinite(); }

}  // namespace npw
