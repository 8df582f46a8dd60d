#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace npw {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Library-wide default tolerance. The underlying algebra is exact; every
/// tolerance in this library only absorbs floating-point error and can be
/// overridden per call.
inline constexpr double kDefaultTol = 1e-10;

/// Thrown when an operation that relies on the trace identity
/// 2 tr(h^mu h^nu) = delta^{mu nu} is handed a basis that violates it.
/// Callers holding such a basis must go through the solve-based expansion
/// instead of trace extraction.
struct NonOrthonormalBasisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a residual that should vanish exceeds its tolerance
/// (imaginary parts of real coefficients, expansion leftovers, overflow).
struct ResidualError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Transpose of the complex conjugate.
ComplexMatrix hermitian_conjugate(const ComplexMatrix& m);

struct HermitianParts {
  ComplexMatrix hermitian;      // (a + a^dagger)/2
  ComplexMatrix antihermitian;  // (a - a^dagger)/2
};

HermitianParts hermitian_split(const ComplexMatrix& a);

/// Matrix exponential by scaling-and-squaring around a truncated series.
/// The number of squarings is chosen so the scaled norm is at most 0.5.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Orthonormal basis of the right nullspace, from the SVD of m. A singular
/// value sigma counts as zero when sigma <= tol * sigma_max; for a zero
/// matrix the whole domain is returned.
std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol);

/// Nullspace with an absolute singular-value cutoff. Used where m is a
/// projection of a larger system and its own largest singular value can be
/// pure rounding noise, which makes a relative cutoff meaningless.
std::vector<ComplexVector> nullspace_below(const ComplexMatrix& m, double abs_threshold);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, row-major pair order: out((i,k),(j,l)) = a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry magnitude (0 for empty matrices).
double max_abs(const ComplexMatrix& m);
double max_abs(const RealMatrix& m);

bool is_finite(const ComplexMatrix& m);

}  // namespace npw
