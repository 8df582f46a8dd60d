#include "npw/basis.hpp"

#include "npw/structure.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace npw;

namespace {

ComplexMatrix pauli(int i) {
  ComplexMatrix m(2, 2);
  switch (i) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0); break;
    case 3: m << 1, 0, 0, -1; break;
    default: m = ComplexMatrix::Identity(2, 2); break;
  }
  return m;
}

}  // namespace

TEST_CASE("utility basis for N = 2 is the halved Pauli set in list order") {
  const auto basis = build_utility_basis(2);
  REQUIRE(basis.dim() == 4);
  for (int i = 1; i <= 4; ++i) {
    CHECK(max_abs((basis.matrices[i - 1] - 0.5 * pauli(i)).eval()) == 0.0);
  }
  CHECK(basis.labels[0] == BasisLabel{Family::plus, 1, 2});
  CHECK(basis.labels[1] == BasisLabel{Family::minus, 1, 2});
  CHECK(basis.labels[2] == BasisLabel{Family::diag, 2, 2});
  CHECK(basis.labels[3] == BasisLabel{Family::time, 1, 1});
  CHECK(basis.time_index() == 3);
  CHECK(basis.index_of({Family::minus, 1, 2}) == 1);
  CHECK(basis.index_of({Family::plus, 2, 3}) == -1);
}

TEST_CASE("utility basis boundary dimensions") {
  const auto one = build_utility_basis(1);
  REQUIRE(one.dim() == 1);
  CHECK(std::abs(one.matrices[0](0, 0) - 1.0 / std::sqrt(2.0)) < 1e-16);

  const auto three = build_utility_basis(3);
  REQUIRE(three.dim() == 9);
  // Time element I/sqrt(6) sits last; the a = 3 ladder entry is
  // diag(1,1,-2)/sqrt(12).
  CHECK(max_abs((three.matrices[8] -
                 ComplexMatrix::Identity(3, 3) / std::sqrt(6.0)).eval()) < 1e-16);
  ComplexMatrix ladder = ComplexMatrix::Zero(3, 3);
  ladder(0, 0) = 1.0 / std::sqrt(12.0);
  ladder(1, 1) = 1.0 / std::sqrt(12.0);
  ladder(2, 2) = -2.0 / std::sqrt(12.0);
  CHECK(max_abs((three.matrices[7] - ladder).eval()) < 1e-15);
  CHECK(three.labels[7] == BasisLabel{Family::diag, 3, 3});

  CHECK_THROWS_AS(build_utility_basis(0), std::invalid_argument);
}

TEST_CASE("utility basis properties for N = 1..6") {
  for (int n = 1; n <= 6; ++n) {
    const auto basis = build_utility_basis(n);
    const int pairs = n * (n - 1) / 2;
    REQUIRE(static_cast<int>(basis.matrices.size()) == pairs + pairs + (n - 1) + 1);
    REQUIRE(basis.dim() == n * n);
    CHECK(basis.orthonormality_residual() < 1e-12);
    for (int i = 0; i < basis.dim(); ++i) {
      const ComplexMatrix& m = basis.matrices[i];
      CHECK(max_abs((m - m.adjoint()).eval()) == 0.0);
      const double want_trace = i == basis.time_index() ? std::sqrt(n / 2.0) : 0.0;
      CHECK(std::abs(m.trace() - want_trace) < 1e-12);
    }
  }
}

TEST_CASE("anti-rep") {
  const auto basis = build_utility_basis(2);
  const auto bar = anti_rep(basis);

  SUBCASE("sign pattern at N = 2") {
    CHECK(max_abs((bar.matrices[0] + 0.5 * pauli(1)).eval()) == 0.0);  // -h^x
    CHECK(max_abs((bar.matrices[1] - 0.5 * pauli(2)).eval()) == 0.0);  // +h^y
    CHECK(max_abs((bar.matrices[2] + 0.5 * pauli(3)).eval()) == 0.0);  // -h^z
    CHECK(max_abs((bar.matrices[3] + 0.5 * pauli(4)).eval()) == 0.0);  // -h^t
  }

  SUBCASE("involution is exact") {
    const auto back = anti_rep(bar);
    for (int i = 0; i < basis.dim(); ++i) {
      CHECK(max_abs((back.matrices[i] - basis.matrices[i]).eval()) == 0.0);
    }
  }

  SUBCASE("same f, negated d at N = 3") {
    const auto b3 = build_utility_basis(3);
    const auto sc = compute_structure_constants(b3);
    const auto sc_bar = compute_structure_constants(anti_rep(b3));
    double worst_f = 0.0, worst_d = 0.0;
    for (int mu = 0; mu < 9; ++mu) {
      for (int la = 0; la < 9; ++la) {
        for (int nu = 0; nu < 9; ++nu) {
          worst_f = std::max(worst_f, std::abs(sc_bar.f(mu, la, nu) - sc.f(mu, la, nu)));
          worst_d = std::max(worst_d, std::abs(sc_bar.d(mu, la, nu) + sc.d(mu, la, nu)));
        }
      }
    }
    CHECK(worst_f < 1e-13);
    CHECK(worst_d < 1e-13);
    for (const auto& m : anti_rep(b3).matrices) {
      CHECK(max_abs((m - m.adjoint()).eval()) == 0.0);
    }
  }
}

TEST_CASE("expand_in_basis") {
  const auto basis = build_utility_basis(2);

  SUBCASE("orthonormal picks out single coefficients") {
    const auto coeffs = expand_in_basis(basis.matrices[2], basis);
    REQUIRE(coeffs.size() == 4);
    CHECK(std::abs(coeffs[0]) < 1e-14);
    CHECK(std::abs(coeffs[1]) < 1e-14);
    CHECK(std::abs(coeffs[2] - 1.0) < 1e-14);
    CHECK(std::abs(coeffs[3]) < 1e-14);
  }

  SUBCASE("identity is twice the time element") {
    const auto coeffs = expand_in_basis(ComplexMatrix::Identity(2, 2), basis);
    CHECK(std::abs(coeffs[3] - 2.0) < 1e-14);
    CHECK(std::abs(coeffs[0]) + std::abs(coeffs[1]) + std::abs(coeffs[2]) < 1e-14);
  }

  SUBCASE("random hermitian round-trips") {
    SplitMix64 rng(71);
    const auto b3 = build_utility_basis(3);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix a = testutil::random_hermitian(rng, 3);
      const auto coeffs = expand_in_basis(a, b3, 1e-12);
      CHECK(max_abs((a - reconstruct_from_basis(coeffs, b3)).eval()) < 1e-12);
    }
  }

  SUBCASE("non-hermitian input is rejected") {
    ComplexMatrix bad(2, 2);
    bad << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(expand_in_basis(bad, basis), ResidualError);
  }
}

TEST_CASE("apply_basis_change") {
  const auto basis = build_utility_basis(2);

  SUBCASE("identity R keeps the basis") {
    const auto same = apply_basis_change(basis, BasisChange::from_matrix(RealMatrix::Identity(4, 4)));
    for (int i = 0; i < 4; ++i) {
      CHECK(max_abs((same.matrices[i] - basis.matrices[i]).eval()) == 0.0);
    }
    CHECK_FALSE(same.utility);
  }

  SUBCASE("a permutation relabels") {
    RealMatrix perm = RealMatrix::Identity(4, 4);
    perm(0, 0) = perm(1, 1) = 0.0;
    perm(0, 1) = perm(1, 0) = 1.0;
    const auto swapped = apply_basis_change(basis, BasisChange::from_matrix(perm));
    CHECK(max_abs((swapped.matrices[0] - basis.matrices[1]).eval()) == 0.0);
    CHECK(max_abs((swapped.matrices[1] - basis.matrices[0]).eval()) == 0.0);
  }

  SUBCASE("primed structure constants follow the R R f R^-1 pattern") {
    SplitMix64 rng(19);
    const auto sc = compute_structure_constants(basis);
    for (int trial = 0; trial < 3; ++trial) {
      RealMatrix r(4, 4);
      do {
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) r(i, j) = rng.uniform(-1.0, 1.0);
        }
      } while (Eigen::JacobiSVD<RealMatrix>(r).singularValues().minCoeff() < 0.1);
      const BasisChange change = BasisChange::from_matrix(r);
      const auto primed = apply_basis_change(basis, change);

      // Extract primed constants by solve-based expansion (the primed
      // basis is not orthonormal) and compare against the transformation
      // law contracted from the utility-rep constants.
      const Complex i_unit(0, 1);
      double worst = 0.0;
      for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
          const ComplexMatrix comm =
              commutator(primed.matrices[mu], primed.matrices[nu]);
          const ComplexMatrix anti =
              anticommutator(primed.matrices[mu], primed.matrices[nu]);
          const auto f_row = expand_in_basis((-i_unit * comm).eval(), primed, 1e-9);
          const auto d_row = expand_in_basis(anti, primed, 1e-9);
          for (int la = 0; la < 4; ++la) {
            double f_law = 0.0, d_law = 0.0;
            for (int s = 0; s < 4; ++s) {
              for (int rho = 0; rho < 4; ++rho) {
                for (int tau = 0; tau < 4; ++tau) {
                  const double w = r(mu, s) * r(nu, rho) * change.r_inverse(tau, la);
                  f_law += w * sc.f(s, rho, tau);
                  d_law += w * sc.d(s, rho, tau);
                }
              }
            }
            worst = std::max(worst, std::abs(f_row[la] - f_law));
            worst = std::max(worst, std::abs(d_row[la] - d_law));
          }
        }
      }
      CHECK(worst < 1e-9);
    }
  }

  SUBCASE("singular R is rejected") {
    RealMatrix r = RealMatrix::Zero(4, 4);
    r(0, 0) = 1.0;
    CHECK_THROWS_AS(BasisChange::from_matrix(r), std::invalid_argument);
  }
}
