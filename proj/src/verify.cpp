#include "npw/verify.hpp"

#include "npw/algebra.hpp"
#include "npw/basis.hpp"
#include "npw/geometry.hpp"
#include "npw/momentum.hpp"
#include "npw/rng.hpp"
#include "npw/structure.hpp"

#include <cmath>

namespace npw {

namespace {

constexpr int kRotationTrials = 100;
constexpr int kCovarianceTrials = 50;
constexpr int kSubspaceTrials = 20;
constexpr int kBasisChangeTrials = 10;

// Per-family defaults; the commutator suites widen above N = 4 where the
// longer reduction chains accumulate more rounding.
struct Tolerances {
  double basis, structure, algebra, copycat, rotation, covariance, subspace, similarity,
      basis_change;

  static Tolerances defaults(int n) {
    const double suites = n <= 4 ? 1e-12 : 1e-10;
    return {1e-12, 1e-12, suites, suites, 1e-10, 1e-9, 1e-12, 1e-12, 1e-10};
  }
  static Tolerances uniform(double tol) {
    return {tol, tol, tol, tol, tol, tol, tol, tol, tol};
  }
};

double generator_set_difference(const GeneratorSetN2& a, const GeneratorSetN2& b) {
  double worst = 0.0;
  for (int mu = 0; mu < a.dim(); ++mu) {
    worst = std::max(worst, max_abs((a.j[mu] - b.j[mu]).eval()));
    worst = std::max(worst, max_abs((a.k[mu] - b.k[mu]).eval()));
  }
  return worst;
}

}  // namespace

VerificationReport run_verification_suite(const RunConfig& cfg, const FaultInjection& fault) {
  const int n = cfg.n;
  const int d = n * n;
  const Tolerances tols =
      cfg.tolerance ? Tolerances::uniform(*cfg.tolerance) : Tolerances::defaults(n);

  VerificationReport report;
  const HermitianBasis basis = build_utility_basis(n);

  report.add("basis/orthonormality", basis.orthonormality_residual(), tols.basis);
  {
    double trace_residual = 0.0;
    for (int i = 0; i < d; ++i) {
      const Complex tr = basis.matrices[i].trace();
      const double want = i == basis.time_index() ? std::sqrt(n / 2.0) : 0.0;
      trace_residual = std::max(trace_residual, std::abs(tr - want));
    }
    report.add("basis/traces", trace_residual, tols.basis);
  }
  {
    const HermitianBasis bar = anti_rep(basis);
    double involution = 0.0;
    const HermitianBasis back = anti_rep(bar);
    for (int i = 0; i < d; ++i) {
      involution = std::max(involution, max_abs((back.matrices[i] - basis.matrices[i]).eval()));
    }
    report.add("basis/anti-rep-involution", involution, 0.0);
  }

  StructureConstants sc = compute_structure_constants(basis);
  if (fault.perturb_d) sc.d(0, 0, 0) += fault.amount;
  report.add(verify_symmetries(sc, tols.structure));
  report.add(verify_time_index(sc, tols.structure));

  const GeneratorSet2N g2n = build_2n_generators(basis, cfg.eps_p);
  {
    auto pw = verify_poincare_weyl(g2n, sc, tols.algebra);
    report.merge(pw);
  }
  const GeneratorSetN2 gn2 = build_n2_generators(sc, cfg.eps_p);
  report.merge(verify_lorentz_weyl(gn2, sc, tols.algebra));

  // Coefficient extraction from the 2N-rep must rebuild the N^2-rep.
  {
    const GeneratorSetN2 extracted = extract_copycat(g2n, basis);
    report.add("copycat/cross-check", generator_set_difference(extracted, gn2), tols.copycat);
  }

  SplitMix64 rng(cfg.seed);

  {
    double dist = 0.0, time = 0.0;
    for (int trial = 0; trial < kRotationTrials; ++trial) {
      const RealVector theta = rng.vector(d, -M_PI, M_PI);
      const Event e{rng.vector(d, -1.0, 1.0)};
      const auto res = rotation_invariance_check(gn2, theta, e);
      dist = std::max(dist, res.distance);
      time = std::max(time, res.time);
    }
    report.add("geometry/rotation-distance", dist, tols.rotation);
    report.add("geometry/rotation-time", time, tols.rotation);
  }

  {
    double worst = 0.0;
    for (int trial = 0; trial < kCovarianceTrials; ++trial) {
      TransformParams p{rng.vector_in_ball(d, 1.0), rng.vector_in_ball(d, 1.0), cfg.eps_p};
      const auto cov = covariance_check(g2n, gn2, p, tols.covariance);
      worst = std::max(worst, cov.max_residual());
    }
    report.add("covariance/finite-trials", worst, tols.covariance);
  }

  if (n >= 2) {
    const auto idx = subspace_indices(n);
    double worst = 0.0;
    for (int trial = 0; trial < kSubspaceTrials; ++trial) {
      RealVector x = RealVector::Zero(d);
      for (int k = 0; k < 4; ++k) x(idx[k]) = rng.uniform(-1.0, 1.0);
      const Eigen::Vector3d dphi(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                 rng.uniform(-1.0, 1.0));
      worst = std::max(worst, std::abs(subspace_invariance_check(sc, Event{x}, dphi, cfg.eps_p)));
    }
    report.add("geometry/subspace-interval", worst, tols.subspace);
  }

  {
    // build_similarity validates its identities internally; record the
    // residual explicitly here.
    const SimilarityMap s = build_similarity(basis, cfg.eps_p);
    const GeneratorSetN2 clean = build_n2_generators(compute_structure_constants(basis), cfg.eps_p);
    const std::vector<ComplexMatrix> ref =
        cfg.eps_p > 0 ? basis.matrices : anti_rep(basis).matrices;
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const Complex i_unit(0.0, 1.0);
    double worst = 0.0;
    for (int mu = 0; mu < d; ++mu) {
      const ComplexMatrix bar = -ref[mu].transpose();
      const ComplexMatrix jt = kron(ref[mu], id) + kron(id, bar);
      const ComplexMatrix kt = -i_unit * (kron(ref[mu], id) - kron(id, bar));
      worst = std::max(worst, max_abs((s.s * clean.j[mu] - jt * s.s).eval()));
      worst = std::max(worst, max_abs((s.s * clean.k[mu] - kt * s.s).eval()));
    }
    report.add("similarity/identities", worst, tols.similarity);
  }

  if (n <= 3) {
    double worst = 0.0;
    for (int trial = 0; trial < kBasisChangeTrials; ++trial) {
      RealMatrix r(d, d);
      do {
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) r(i, j) = rng.uniform(-1.0, 1.0);
        }
      } while (Eigen::JacobiSVD<RealMatrix>(r).singularValues().minCoeff() < 0.05);
      const auto rep = basis_change_covariance(basis, BasisChange::from_matrix(r), cfg.eps_p,
                                               tols.basis_change);
      worst = std::max(worst, rep.max_residual());
    }
    report.add("similarity/basis-change-trials", worst, tols.basis_change);
  }

  report.sort_by_identity();
  return report;
}

Json verification_document(const RunConfig& cfg, const FaultInjection& fault) {
  const VerificationReport report = run_verification_suite(cfg, fault);
  Json doc = report_to_json(report);
  doc["n"] = cfg.n;
  doc["eps_p"] = cfg.eps_p;
  doc["seed"] = cfg.seed;
  doc["generator"] = SplitMix64::kName;
  if (cfg.tolerance) {
    doc["tolerance_override"] = *cfg.tolerance;
  } else {
    doc["tolerance_override"] = nullptr;
  }
  return doc;
}

}  // namespace npw
