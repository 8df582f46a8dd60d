#include "npw/momentum.hpp"

#include <cmath>

namespace npw {

namespace {

void check_square_list(const std::vector<ComplexMatrix>& rep, const char* who) {
  if (rep.empty()) return;
  const Eigen::Index m = rep[0].rows();
  for (const auto& x : rep) {
    if (x.rows() != m || x.cols() != m) {
      throw std::invalid_argument(std::string(who) + ": rep matrices must be square and equal-sized");
    }
  }
}

double fundamental_residual(const std::vector<ComplexMatrix>& rep,
                            const StructureConstants& sc) {
  const int d = sc.dim();
  const Complex i_unit(0.0, 1.0);
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      ComplexMatrix lhs = commutator(rep[mu], rep[nu]);
      for (int sigma = 0; sigma < d; ++sigma) {
        const double f = sc.f(mu, nu, sigma);
        if (f != 0.0) lhs -= i_unit * f * rep[sigma];
      }
      worst = std::max(worst, max_abs(lhs));
    }
  }
  return worst;
}

double lorentz_weyl_residual(const std::vector<ComplexMatrix>& j,
                             const std::vector<ComplexMatrix>& k,
                             const StructureConstants& sc) {
  const int d = sc.dim();
  const Complex i_unit(0.0, 1.0);
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      ComplexMatrix jj = commutator(j[mu], j[nu]);
      ComplexMatrix jk = commutator(j[mu], k[nu]);
      ComplexMatrix kk = commutator(k[mu], k[nu]);
      for (int sigma = 0; sigma < d; ++sigma) {
        const double f = sc.f(mu, nu, sigma);
        if (f == 0.0) continue;
        jj -= i_unit * f * j[sigma];
        jk -= i_unit * f * k[sigma];
        kk += i_unit * f * j[sigma];
      }
      worst = std::max({worst, max_abs(jj), max_abs(jk), max_abs(kk)});
    }
  }
  return worst;
}

}  // namespace

CombinedRep combine_reps(const std::vector<ComplexMatrix>& ja,
                         const std::vector<ComplexMatrix>& jb, const StructureConstants& sc,
                         double tol) {
  const int d = sc.dim();
  if (static_cast<int>(ja.size()) != d || static_cast<int>(jb.size()) != d) {
    throw std::invalid_argument("combine_reps: need one generator per basis index");
  }
  check_square_list(ja, "combine_reps");
  check_square_list(jb, "combine_reps");
  if (fundamental_residual(ja, sc) > tol || fundamental_residual(jb, sc) > tol) {
    throw std::invalid_argument(
        "combine_reps: input reps fail the fundamental commutation relations");
  }

  CombinedRep rep;
  rep.dim_a = ja.empty() ? 0 : static_cast<int>(ja[0].rows());
  rep.dim_b = jb.empty() ? 0 : static_cast<int>(jb[0].rows());
  const ComplexMatrix ia = ComplexMatrix::Identity(rep.dim_a, rep.dim_a);
  const ComplexMatrix ib = ComplexMatrix::Identity(rep.dim_b, rep.dim_b);
  const Complex i_unit(0.0, 1.0);
  for (int mu = 0; mu < d; ++mu) {
    const ComplexMatrix left = kron(ja[mu], ib);
    const ComplexMatrix right = kron(ia, jb[mu]);
    rep.j_ab.push_back(left + right);
    rep.k_ab.push_back(-i_unit * (left - right));
  }

  if (lorentz_weyl_residual(rep.j_ab, rep.k_ab, sc) > tol) {
    throw ResidualError("combine_reps: combined rep fails the Lorentz-Weyl relations");
  }
  return rep;
}

std::vector<ComplexMatrix> trivial_rep(int n) {
  return std::vector<ComplexMatrix>(static_cast<std::size_t>(n) * n,
                                    ComplexMatrix::Zero(1, 1));
}

std::vector<ComplexMatrix> conjugate_rep(const std::vector<ComplexMatrix>& rep) {
  std::vector<ComplexMatrix> out;
  out.reserve(rep.size());
  for (const auto& x : rep) out.push_back((-x.transpose()).eval());
  return out;
}

namespace {

ComplexMatrix sym_isometry(int m) {
  ComplexMatrix v = ComplexMatrix::Zero(m * m, m * (m + 1) / 2);
  int col = 0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < m; ++a) {
    v(a * m + a, col++) = 1.0;
    for (int b = a + 1; b < m; ++b) {
      v(a * m + b, col) = inv_sqrt2;
      v(b * m + a, col) = inv_sqrt2;
      ++col;
    }
  }
  return v;
}

ComplexMatrix antisym_isometry(int m) {
  ComplexMatrix v = ComplexMatrix::Zero(m * m, m * (m - 1) / 2);
  int col = 0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      v(a * m + b, col) = inv_sqrt2;
      v(b * m + a, col) = -inv_sqrt2;
      ++col;
    }
  }
  return v;
}

std::vector<ComplexMatrix> tensor_square(const std::vector<ComplexMatrix>& rep,
                                         const ComplexMatrix& isometry) {
  check_square_list(rep, "tensor_square");
  const int m = rep.empty() ? 0 : static_cast<int>(rep[0].rows());
  const ComplexMatrix id = ComplexMatrix::Identity(m, m);
  std::vector<ComplexMatrix> out;
  out.reserve(rep.size());
  for (const auto& x : rep) {
    const ComplexMatrix big = kron(x, id) + kron(id, x);
    out.push_back(isometry.adjoint() * big * isometry);
  }
  return out;
}

}  // namespace

std::vector<ComplexMatrix> tensor_square_sym(const std::vector<ComplexMatrix>& rep) {
  const int m = rep.empty() ? 0 : static_cast<int>(rep[0].rows());
  return tensor_square(rep, sym_isometry(m));
}

std::vector<ComplexMatrix> tensor_square_antisym(const std::vector<ComplexMatrix>& rep) {
  const int m = rep.empty() ? 0 : static_cast<int>(rep[0].rows());
  return tensor_square(rep, antisym_isometry(m));
}

std::vector<ComplexMatrix> named_factor_rep(const std::string& token,
                                            const HermitianBasis& basis) {
  if (token.rfind("bar-", 0) == 0) {
    return conjugate_rep(named_factor_rep(token.substr(4), basis));
  }
  if (token == "fund") return basis.matrices;
  if (token == "antifund") return conjugate_rep(basis.matrices);
  if (token == "trivial") return trivial_rep(basis.n);
  if (token == "sym2") return tensor_square_sym(basis.matrices);
  if (token == "antisym2") return tensor_square_antisym(basis.matrices);
  throw std::invalid_argument("unknown rep factor '" + token + "'");
}

SimilarityMap build_similarity(const HermitianBasis& basis, int eps_p, double tol) {
  if (eps_p != 1 && eps_p != -1) {
    throw std::invalid_argument("build_similarity: eps_p must be +1 or -1");
  }
  const int n = basis.n;
  const int d = basis.dim();
  const std::vector<ComplexMatrix> ref =
      eps_p > 0 ? basis.matrices : anti_rep(basis).matrices;

  ComplexMatrix s(d, d);
  for (int m0 = 0; m0 < n; ++m0) {
    for (int n0 = 0; n0 < n; ++n0) {
      const int lambda = n * m0 + n0;
      for (int sigma = 0; sigma < d; ++sigma) s(lambda, sigma) = ref[sigma](m0, n0);
    }
  }

  const StructureConstants sc = compute_structure_constants(basis);
  const GeneratorSetN2 gen = build_n2_generators(sc, eps_p);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const Complex i_unit(0.0, 1.0);
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    const ComplexMatrix bar = -ref[mu].transpose();
    const ComplexMatrix j_target = kron(ref[mu], id) + kron(id, bar);
    const ComplexMatrix k_target = -i_unit * (kron(ref[mu], id) - kron(id, bar));
    worst = std::max(worst, max_abs((s * gen.j[mu] - j_target * s).eval()));
    worst = std::max(worst, max_abs((s * gen.k[mu] - k_target * s).eval()));
  }
  if (worst > tol) {
    throw ResidualError("build_similarity: reorganization map fails the defining identities");
  }

  Eigen::FullPivLU<ComplexMatrix> lu(s);
  if (!lu.isInvertible()) {
    throw ResidualError("build_similarity: map is singular; input is not a complete basis");
  }
  SimilarityMap map{s, lu.inverse()};
  const double inv_residual =
      max_abs((map.s * map.s_inverse - ComplexMatrix::Identity(d, d)).eval());
  if (inv_residual > std::max(tol, 1e-12)) {
    throw ResidualError("build_similarity: inverse residual above tolerance");
  }
  return map;
}

VerificationReport basis_change_covariance(const HermitianBasis& basis,
                                           const BasisChange& change, int eps_p, double tol) {
  const int n = basis.n;
  const int d = basis.dim();
  if (change.r.rows() != d) {
    throw std::invalid_argument("basis_change_covariance: R must be N^2 x N^2");
  }
  const StructureConstants sc = compute_structure_constants(basis);

  // Primed constants: contract R into the first two indices, R^-1 into the
  // third.
  StructureConstants primed;
  primed.n = n;
  primed.utility_rep = false;
  primed.f_data.assign(sc.f_data.size(), 0.0);
  primed.d_data.assign(sc.d_data.size(), 0.0);
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      for (int lambda = 0; lambda < d; ++lambda) {
        double fsum = 0.0, dsum = 0.0;
        for (int sigma = 0; sigma < d; ++sigma) {
          const double rs = change.r(mu, sigma);
          if (rs == 0.0) continue;
          for (int rho = 0; rho < d; ++rho) {
            const double rr = rs * change.r(nu, rho);
            if (rr == 0.0) continue;
            for (int tau = 0; tau < d; ++tau) {
              const double w = rr * change.r_inverse(tau, lambda);
              fsum += w * sc.f(sigma, rho, tau);
              dsum += w * sc.d(sigma, rho, tau);
            }
          }
        }
        primed.f(mu, nu, lambda) = fsum;
        primed.d(mu, nu, lambda) = dsum;
      }
    }
  }
  const GeneratorSetN2 primed_gen = build_n2_generators(primed, eps_p);

  const std::vector<ComplexMatrix> ref =
      eps_p > 0 ? basis.matrices : anti_rep(basis).matrices;
  std::vector<ComplexMatrix> primed_ref(d, ComplexMatrix::Zero(n, n));
  for (int mu = 0; mu < d; ++mu) {
    for (int sigma = 0; sigma < d; ++sigma) {
      if (change.r(mu, sigma) != 0.0) primed_ref[mu] += change.r(mu, sigma) * ref[sigma];
    }
  }

  const SimilarityMap base = build_similarity(basis, eps_p);
  const ComplexMatrix s_primed = base.s * change.r_inverse;

  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const Complex i_unit(0.0, 1.0);
  double worst_j = 0.0, worst_k = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    const ComplexMatrix bar = -primed_ref[mu].transpose();
    const ComplexMatrix j_target = kron(primed_ref[mu], id) + kron(id, bar);
    const ComplexMatrix k_target = -i_unit * (kron(primed_ref[mu], id) - kron(id, bar));
    worst_j = std::max(worst_j, max_abs((s_primed * primed_gen.j[mu] - j_target * s_primed).eval()));
    worst_k = std::max(worst_k, max_abs((s_primed * primed_gen.k[mu] - k_target * s_primed).eval()));
  }

  VerificationReport report;
  report.add("similarity/basis-change-j", worst_j, tol);
  report.add("similarity/basis-change-k", worst_k, tol);
  return report;
}

namespace {

struct SideLayout {
  int rows = 0;  // block row space dimension
  int cols = 0;  // block column space dimension
  const std::vector<ComplexMatrix>* row_j = nullptr;
  const std::vector<ComplexMatrix>* row_k = nullptr;
  const std::vector<ComplexMatrix>* col_j = nullptr;
  const std::vector<ComplexMatrix>* col_k = nullptr;
};

SideLayout side_layout(const CombinedRep& ab, const CombinedRep& cd, BlockSide side) {
  if (side == BlockSide::upper) {
    return {ab.dim(), cd.dim(), &ab.j_ab, &ab.k_ab, &cd.j_ab, &cd.k_ab};
  }
  return {cd.dim(), ab.dim(), &cd.j_ab, &cd.k_ab, &ab.j_ab, &ab.k_ab};
}

}  // namespace

MomentumSolution solve_momentum(const CombinedRep& rep_ab, const CombinedRep& rep_cd,
                                const StructureConstants& sc, int eps_p, BlockSide side,
                                double tol) {
  if (eps_p != 1 && eps_p != -1) {
    throw std::invalid_argument("solve_momentum: eps_p must be +1 or -1");
  }
  const int d = sc.dim();
  if (static_cast<int>(rep_ab.j_ab.size()) != d ||
      static_cast<int>(rep_cd.j_ab.size()) != d) {
    throw std::invalid_argument("solve_momentum: rep/basis dimension mismatch");
  }

  MomentumSolution sol;
  sol.n = sc.n;
  sol.eps_p = eps_p;
  sol.side = side;
  sol.dim_a = rep_ab.dim_a;
  sol.dim_b = rep_ab.dim_b;
  sol.dim_c = rep_cd.dim_a;
  sol.dim_d = rep_cd.dim_b;

  const SideLayout lay = side_layout(rep_ab, rep_cd, side);
  const int block = lay.rows * lay.cols;
  const long unknowns = static_cast<long>(d) * block;
  if (unknowns == 0) return sol;

  auto unk = [&](int sigma, int r, int c) {
    return (static_cast<long>(sigma) * lay.rows + r) * lay.cols + c;
  };

  // Joint nullspace over all stacked momentum rows, taken one (mu, nu)
  // constraint block at a time: restrict each block to the solution space
  // found so far and keep its nullspace.
  ComplexMatrix space = ComplexMatrix::Identity(unknowns, unknowns);
  const Complex i_unit(0.0, 1.0);

  ComplexMatrix constraint(block, unknowns);
  for (int family = 0; family < 2 && space.cols() > 0; ++family) {
    const auto& row_gen = family == 0 ? *lay.row_j : *lay.row_k;
    const auto& col_gen = family == 0 ? *lay.col_j : *lay.col_k;
    for (int mu = 0; mu < d && space.cols() > 0; ++mu) {
      for (int nu = 0; nu < d && space.cols() > 0; ++nu) {
        constraint.setZero();
        for (int r = 0; r < lay.rows; ++r) {
          for (int c = 0; c < lay.cols; ++c) {
            const int row = r * lay.cols + c;
            // [X^mu, G^nu] entry (r,c): X^mu row r against the column
            // generator minus the row generator against X^mu column c.
            for (int k = 0; k < lay.cols; ++k) {
              constraint(row, unk(mu, r, k)) += col_gen[nu](k, c);
            }
            for (int k = 0; k < lay.rows; ++k) {
              constraint(row, unk(mu, k, c)) -= row_gen[nu](r, k);
            }
            for (int sigma = 0; sigma < d; ++sigma) {
              const Complex coeff = family == 0
                                        ? i_unit * sc.f(mu, nu, sigma)
                                        : -static_cast<double>(eps_p) * i_unit *
                                              sc.d(mu, nu, sigma);
              if (coeff != Complex(0.0, 0.0)) constraint(row, unk(sigma, r, c)) -= coeff;
            }
          }
        }
        const ComplexMatrix reduced = constraint * space;
        // Cut against the block's own coefficient scale: when a block is
        // already satisfied on the remaining space, `reduced` is rounding
        // noise and a cut relative to its own largest singular value would
        // discard everything.
        const auto kernel = nullspace_below(reduced, tol * std::max(1.0, max_abs(constraint)));
        ComplexMatrix shrink(space.cols(), static_cast<Eigen::Index>(kernel.size()));
        for (std::size_t k = 0; k < kernel.size(); ++k) shrink.col(k) = kernel[k];
        space = space * shrink;
      }
    }
  }

  sol.basis_dim = static_cast<int>(space.cols());
  if (sol.basis_dim == 0) return sol;

  const int dab = rep_ab.dim();
  const int dcd = rep_cd.dim();
  const int full = dab + dcd;
  for (int v = 0; v < sol.basis_dim; ++v) {
    std::vector<ComplexMatrix> p_set;
    p_set.reserve(d);
    for (int sigma = 0; sigma < d; ++sigma) {
      ComplexMatrix x(lay.rows, lay.cols);
      for (int r = 0; r < lay.rows; ++r) {
        for (int c = 0; c < lay.cols; ++c) x(r, c) = space(unk(sigma, r, c), v);
      }
      ComplexMatrix p = ComplexMatrix::Zero(full, full);
      if (side == BlockSide::upper) {
        p.block(0, dab, dab, dcd) = x;
      } else {
        p.block(dab, 0, dcd, dab) = x;
      }
      p_set.push_back(std::move(p));
    }
    sol.solutions.push_back(std::move(p_set));
  }

  // Residuals of the momentum rows (and mutual commutativity) on the
  // direct-sum space, over every returned solution.
  std::vector<ComplexMatrix> j_full(d, ComplexMatrix::Zero(full, full));
  std::vector<ComplexMatrix> k_full(d, ComplexMatrix::Zero(full, full));
  for (int mu = 0; mu < d; ++mu) {
    j_full[mu].topLeftCorner(dab, dab) = rep_ab.j_ab[mu];
    j_full[mu].bottomRightCorner(dcd, dcd) = rep_cd.j_ab[mu];
    k_full[mu].topLeftCorner(dab, dab) = rep_ab.k_ab[mu];
    k_full[mu].bottomRightCorner(dcd, dcd) = rep_cd.k_ab[mu];
  }
  double worst = 0.0;
  for (const auto& p_set : sol.solutions) {
    for (int mu = 0; mu < d; ++mu) {
      for (int nu = 0; nu < d; ++nu) {
        ComplexMatrix pj = commutator(p_set[mu], j_full[nu]);
        ComplexMatrix pk = commutator(p_set[mu], k_full[nu]);
        for (int sigma = 0; sigma < d; ++sigma) {
          pj -= i_unit * sc.f(mu, nu, sigma) * p_set[sigma];
          pk += static_cast<double>(eps_p) * i_unit * sc.d(mu, nu, sigma) * p_set[sigma];
        }
        worst = std::max({worst, max_abs(pj), max_abs(pk),
                          max_abs(commutator(p_set[mu], p_set[nu]))});
      }
    }
  }
  sol.max_relation_residual = worst;
  return sol;
}

VerificationReport cg_factorization_check(const MomentumSolution& sol, const SimilarityMap& s,
                                          double ratio_tol) {
  if (sol.basis_dim != 1) {
    throw std::invalid_argument(
        "cg_factorization_check: needs a one-dimensional solution space (irreducible "
        "pairing)");
  }
  const int n = sol.n;
  const int d = n * n;
  if (s.s.rows() != d) {
    throw std::invalid_argument("cg_factorization_check: similarity map dimension mismatch");
  }
  const auto& p = sol.p_matrices();
  const int dab = sol.dim_a * sol.dim_b;
  const int dcd = sol.dim_c * sol.dim_d;

  // P~^lambda = S(lambda, mu) P^mu, then regroup the block entries as
  // (lambda_1, row-A-factor, col-C-factor) x (lambda_0, row-B-factor,
  // col-D-factor); a product of two Clebsch-Gordan arrays is rank one.
  std::vector<ComplexMatrix> ptilde(d, ComplexMatrix::Zero(p[0].rows(), p[0].cols()));
  for (int lambda = 0; lambda < d; ++lambda) {
    for (int mu = 0; mu < d; ++mu) {
      if (s.s(lambda, mu) != Complex(0.0, 0.0)) ptilde[lambda] += s.s(lambda, mu) * p[mu];
    }
  }

  const bool upper = sol.side == BlockSide::upper;
  const int r1 = upper ? sol.dim_a : sol.dim_c;  // first row-group factor
  const int r0 = upper ? sol.dim_b : sol.dim_d;
  const int c1 = upper ? sol.dim_c : sol.dim_a;  // first column-group factor
  const int c0 = upper ? sol.dim_d : sol.dim_b;

  ComplexMatrix reshaped(n * r1 * c1, n * r0 * c0);
  for (int l1 = 0; l1 < n; ++l1) {
    for (int l0 = 0; l0 < n; ++l0) {
      const int lambda = n * l1 + l0;
      const ComplexMatrix blockm = upper
                                       ? ptilde[lambda].block(0, dab, dab, dcd).eval()
                                       : ptilde[lambda].block(dab, 0, dcd, dab).eval();
      for (int a = 0; a < r1; ++a) {
        for (int b = 0; b < r0; ++b) {
          for (int c = 0; c < c1; ++c) {
            for (int e = 0; e < c0; ++e) {
              reshaped((l1 * r1 + a) * c1 + c, (l0 * r0 + b) * c0 + e) =
                  blockm(a * r0 + b, c * c0 + e);
            }
          }
        }
      }
    }
  }

  Eigen::JacobiSVD<ComplexMatrix> svd(reshaped);
  const Eigen::VectorXd& sv = svd.singularValues();
  double ratio = 0.0;
  if (sv.size() == 0 || sv(0) == 0.0) {
    ratio = 1.0;  // a zero block is not a CG product
  } else if (sv.size() > 1) {
    ratio = sv(1) / sv(0);
  }

  VerificationReport report;
  report.add("momentum/cg-rank1", ratio, ratio_tol);
  return report;
}

}  // namespace npw
