#include "npw/algebra.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace npw;

TEST_CASE("2N-rep block layout at N = 2 matches the doubled Pauli construction") {
  const auto basis = build_utility_basis(2);
  const auto g = build_2n_generators(basis, +1);
  const Complex i_unit(0, 1);
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexMatrix& h = basis.matrices[mu];
    ComplexMatrix j_want = ComplexMatrix::Zero(4, 4);
    j_want.topLeftCorner(2, 2) = h;
    j_want.bottomRightCorner(2, 2) = h;
    ComplexMatrix k_want = ComplexMatrix::Zero(4, 4);
    k_want.topLeftCorner(2, 2) = i_unit * h;
    k_want.bottomRightCorner(2, 2) = -i_unit * h;
    ComplexMatrix p_want = ComplexMatrix::Zero(4, 4);
    p_want.topRightCorner(2, 2) = h;

    CHECK(max_abs((g.j2n[mu] - j_want).eval()) == 0.0);
    CHECK(max_abs((g.k2n[mu] - k_want).eval()) == 0.0);
    CHECK(max_abs((g.p_plus[mu] - p_want).eval()) == 0.0);
    CHECK(max_abs(g.p_minus[mu]) == 0.0);
  }
  CHECK(g.c_plus == Complex(1.0, 0.0));
  CHECK(g.c_minus == Complex(0.0, 0.0));
}

TEST_CASE("momentum matrices commute exactly") {
  const auto basis = build_utility_basis(3);
  for (int eps : {+1, -1}) {
    const auto g = build_2n_generators(basis, eps, Complex(0.3, -0.7));
    const auto& p = g.momenta();
    for (const auto& a : p) {
      for (const auto& b : p) {
        CHECK(max_abs(commutator(a, b)) == 0.0);
      }
    }
  }
}

TEST_CASE("zero momentum constant is rejected") {
  const auto basis = build_utility_basis(2);
  CHECK_THROWS_AS(build_2n_generators(basis, +1, Complex(0.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(build_2n_generators(basis, 2), std::invalid_argument);
}

TEST_CASE("full commutator suite in the 2N-rep") {
  for (int n : {2, 3, 4}) {
    const auto basis = build_utility_basis(n);
    const auto sc = compute_structure_constants(basis);
    for (int eps : {+1, -1}) {
      const auto report = verify_poincare_weyl(build_2n_generators(basis, eps), sc, 1e-12);
      CHECK(report.all_pass());
    }
  }
}

TEST_CASE("a perturbed d surfaces in the [P,K] family at the injected size") {
  const auto basis = build_utility_basis(2);
  auto sc = compute_structure_constants(basis);
  sc.d(0, 0, 0) += 1e-3;
  const auto report = verify_poincare_weyl(build_2n_generators(basis, +1), sc, 1e-12);
  for (const auto& r : report.records) {
    if (r.identity == "poincare-weyl/PK") {
      CHECK_FALSE(r.pass);
      CHECK(r.residual > 1e-4);
      CHECK(r.residual < 1e-2);
    } else {
      CHECK(r.pass);
    }
  }
}

TEST_CASE("N^2-rep entries and time-index generators") {
  const auto basis2 = build_utility_basis(2);
  const auto sc2 = compute_structure_constants(basis2);
  const auto g2 = build_n2_generators(sc2, +1);

  SUBCASE("j entries are i epsilon, k^t is -i times the unit matrix") {
    for (int mu = 1; mu <= 4; ++mu) {
      for (int nu = 1; nu <= 4; ++nu) {
        CHECK(std::abs(g2.j[2](mu - 1, nu - 1) -
                       Complex(0, testutil::epsilon4(mu, 3, nu))) < 1e-14);
      }
    }
    CHECK(max_abs((g2.k[3] + Complex(0, 1) * ComplexMatrix::Identity(4, 4)).eval()) < 1e-14);
  }

  SUBCASE("time rotation generator vanishes at N = 3") {
    const auto sc3 = compute_structure_constants(build_utility_basis(3));
    const auto g3 = build_n2_generators(sc3, +1);
    CHECK(max_abs(g3.j[8]) < 1e-14);
    CHECK(max_abs((g3.k[8] + Complex(0, std::sqrt(2.0 / 3.0)) *
                                 ComplexMatrix::Identity(9, 9)).eval()) < 1e-14);
  }

  SUBCASE("hermiticity pattern and zero traces in the utility rep") {
    for (int n : {2, 3}) {
      const auto sc = compute_structure_constants(build_utility_basis(n));
      const auto g = build_n2_generators(sc, +1);
      for (int la = 0; la < g.dim(); ++la) {
        CHECK(max_abs((g.j[la] - g.j[la].adjoint()).eval()) < 1e-13);
        CHECK(max_abs((g.k[la] + g.k[la].adjoint()).eval()) < 1e-13);
        CHECK(std::abs(g.j[la].trace()) < 1e-13);
      }
    }
  }
}

TEST_CASE("Lorentz-Weyl relations hold in the N^2-rep for both eps_p") {
  for (int n : {2, 3}) {
    const auto sc = compute_structure_constants(build_utility_basis(n));
    for (int eps : {+1, -1}) {
      const auto report = verify_lorentz_weyl(build_n2_generators(sc, eps), sc, 1e-12);
      CHECK(report.all_pass());
    }
  }
}

TEST_CASE("coefficient extraction reproduces the N^2-rep") {
  SUBCASE("N = 2 extraction matches the closed forms") {
    const auto basis = build_utility_basis(2);
    const auto g2n = build_2n_generators(basis, +1);
    const auto got = extract_copycat(g2n, basis);
    for (int j = 1; j <= 4; ++j) {
      for (int mu = 1; mu <= 4; ++mu) {
        for (int nu = 1; nu <= 4; ++nu) {
          const Complex j_want(0, testutil::epsilon4(mu, j, nu));
          const double kd = (mu == j && nu == 4 ? 1.0 : 0.0) + (nu == j && mu == 4 ? 1.0 : 0.0);
          const Complex k_want(0, -kd);
          CHECK(std::abs(got.j[j - 1](mu - 1, nu - 1) - j_want) < 1e-12);
          if (j <= 3) {
            CHECK(std::abs(got.k[j - 1](mu - 1, nu - 1) - k_want) < 1e-12);
          }
        }
      }
    }
    // The time boost column: k^t = -i 1.
    CHECK(max_abs((got.k[3] + Complex(0, 1) * ComplexMatrix::Identity(4, 4)).eval()) < 1e-12);
  }

  SUBCASE("cross-construction equality up to N = 6") {
    for (int n = 1; n <= 6; ++n) {
      const auto basis = build_utility_basis(n);
      const auto sc = compute_structure_constants(basis);
      for (int eps : {+1, -1}) {
        const auto direct = build_n2_generators(sc, eps);
        const auto extracted = extract_copycat(build_2n_generators(basis, eps), basis);
        double worst = 0.0;
        for (int la = 0; la < sc.dim(); ++la) {
          worst = std::max(worst, max_abs((direct.j[la] - extracted.j[la]).eval()));
          worst = std::max(worst, max_abs((direct.k[la] - extracted.k[la]).eval()));
        }
        CHECK(worst < 1e-12);
      }
    }
  }

  SUBCASE("N = 1 degenerates to a single commuting generator") {
    const auto basis = build_utility_basis(1);
    const auto got = extract_copycat(build_2n_generators(basis, +1), basis);
    CHECK(max_abs(got.j[0]) < 1e-15);
    CHECK(std::abs(got.k[0](0, 0) - Complex(0, -std::sqrt(2.0))) < 1e-14);
  }
}
