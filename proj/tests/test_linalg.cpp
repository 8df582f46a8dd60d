#include "npw/linalg.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace npw;

TEST_CASE("hermitian_conjugate examples") {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  CHECK(max_abs((hermitian_conjugate(id) - id).eval()) == 0.0);

  ComplexMatrix pauli_y(2, 2);
  pauli_y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  CHECK(max_abs((hermitian_conjugate(pauli_y) - pauli_y).eval()) == 0.0);

  ComplexMatrix upper(2, 2);
  upper << 0.0, 1.0, 0.0, 0.0;
  ComplexMatrix lower(2, 2);
  lower << 0.0, 0.0, 1.0, 0.0;
  CHECK(max_abs((hermitian_conjugate(upper) - lower).eval()) == 0.0);
}

TEST_CASE("hermitian_split") {
  SplitMix64 rng(11);

  SUBCASE("hermitian input maps to (H, 0)") {
    const ComplexMatrix h = testutil::random_hermitian(rng, 3);
    const auto parts = hermitian_split(h);
    CHECK(max_abs((parts.hermitian - h).eval()) == 0.0);
    CHECK(max_abs(parts.antihermitian) == 0.0);
  }

  SUBCASE("strictly upper example") {
    ComplexMatrix a(2, 2);
    a << 0.0, 1.0, 0.0, 0.0;
    const auto parts = hermitian_split(a);
    ComplexMatrix herm(2, 2), anti(2, 2);
    herm << 0.0, 0.5, 0.5, 0.0;
    anti << 0.0, 0.5, -0.5, 0.0;
    CHECK(max_abs((parts.hermitian - herm).eval()) == 0.0);
    CHECK(max_abs((parts.antihermitian - anti).eval()) == 0.0);
  }

  SUBCASE("parts reconstruct within one ulp per entry") {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix a = testutil::random_complex(rng, 3, 3);
      const auto parts = hermitian_split(a);
      const ComplexMatrix sum = parts.hermitian + parts.antihermitian;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          const auto close_ulp = [](double got, double want) {
            return got == want || got == std::nextafter(want, got);
          };
          CHECK(close_ulp(sum(r, c).real(), a(r, c).real()));
          CHECK(close_ulp(sum(r, c).imag(), a(r, c).imag()));
        }
      }
      CHECK(max_abs((parts.hermitian - parts.hermitian.adjoint()).eval()) == 0.0);
      CHECK(max_abs((parts.antihermitian + parts.antihermitian.adjoint()).eval()) == 0.0);
    }
  }

  SUBCASE("non-square input rejected") {
    CHECK_THROWS_AS(hermitian_split(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("matrix_exp") {
  SUBCASE("zero and diagonal") {
    const ComplexMatrix z = ComplexMatrix::Zero(3, 3);
    CHECK(max_abs((matrix_exp(z) - ComplexMatrix::Identity(3, 3)).eval()) == 0.0);

    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = Complex(0.3, 0.7);
    diag(1, 1) = Complex(-1.2, 0.1);
    const ComplexMatrix e = matrix_exp(diag);
    CHECK(std::abs(e(0, 0) - std::exp(diag(0, 0))) < 1e-15);
    CHECK(std::abs(e(1, 1) - std::exp(diag(1, 1))) < 1e-15);
    CHECK(std::abs(e(0, 1)) == 0.0);
  }

  SUBCASE("xy-rotation generator at quarter turn") {
    // exp(i theta j^z) with theta = pi/2 must give the rotation matrix
    // with cos = 0, sin = 1 in the xy block.
    ComplexMatrix jz = ComplexMatrix::Zero(4, 4);
    jz(0, 1) = Complex(0, -1);
    jz(1, 0) = Complex(0, 1);
    const ComplexMatrix rot = matrix_exp((Complex(0, 1) * (M_PI / 2) * jz).eval());
    RealMatrix expected(4, 4);
    expected << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1;
    CHECK(max_abs((rot - expected.cast<Complex>()).eval()) < 1e-15);
  }

  SUBCASE("inverse pairing for norms up to 10") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      ComplexMatrix m = testutil::random_complex(rng, 4, 4);
      m *= 10.0 / std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
      const ComplexMatrix prod = matrix_exp((-m).eval()) * matrix_exp(m);
      CHECK(max_abs((prod - ComplexMatrix::Identity(4, 4)).eval()) < 1e-10);
    }
  }

  SUBCASE("antihermitian exponent gives unitary") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix h = testutil::random_hermitian(rng, 5);
      const ComplexMatrix u = matrix_exp((Complex(0, 1) * h).eval());
      CHECK(max_abs((u.adjoint() * u - ComplexMatrix::Identity(5, 5)).eval()) < 1e-12);
    }
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(matrix_exp(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
    ComplexMatrix huge = ComplexMatrix::Identity(2, 2) * 1e5;
    CHECK_THROWS_AS(matrix_exp(huge), ResidualError);  // e^1e5 overflows
  }
}

TEST_CASE("nullspace") {
  SUBCASE("full rank gives empty basis") {
    CHECK(nullspace(ComplexMatrix::Identity(3, 3), 1e-10).empty());
  }

  SUBCASE("zero matrix annihilates everything") {
    CHECK(nullspace(ComplexMatrix::Zero(2, 3), 1e-10).size() == 3);
  }

  SUBCASE("single row") {
    ComplexMatrix m(1, 3);
    m << 1.0, 1.0, 0.0;
    const auto basis = nullspace(m, 1e-10);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK((m * v).norm() < 1e-12);
    CHECK(std::abs(basis[0].dot(basis[1])) < 1e-12);
    CHECK(std::abs(basis[0].norm() - 1.0) < 1e-12);
    CHECK(std::abs(basis[1].norm() - 1.0) < 1e-12);
  }

  SUBCASE("vectors orthonormal and annihilated on random rank-deficient input") {
    SplitMix64 rng(5);
    const ComplexMatrix a = testutil::random_complex(rng, 4, 2);
    const ComplexMatrix b = testutil::random_complex(rng, 2, 6);
    const ComplexMatrix m = a * b;  // rank <= 2, six columns
    const auto basis = nullspace(m, 1e-10);
    REQUIRE(basis.size() == 4);
    const double scale = max_abs(m);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK((m * basis[i]).norm() <= 1e-10 * scale * 10);
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        CHECK(std::abs(basis[i].dot(basis[j])) < 1e-12);
      }
    }
  }

  SUBCASE("tolerance must be positive") {
    CHECK_THROWS_AS(nullspace(ComplexMatrix::Identity(2, 2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(nullspace(ComplexMatrix::Identity(2, 2), -1.0), std::invalid_argument);
  }
}

TEST_CASE("kron pair ordering") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  const ComplexMatrix k = kron(a, b);
  CHECK(k(0, 1) == Complex(1.0, 0.0));   // a(0,0) b(0,1)
  CHECK(k(2, 1) == Complex(3.0, 0.0));   // a(1,0) b(0,1)
  CHECK(k(3, 2) == Complex(4.0, 0.0));   // a(1,1) b(1,0)
}
