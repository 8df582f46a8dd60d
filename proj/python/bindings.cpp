#include "npw/algebra.hpp"
#include "npw/basis.hpp"
#include "npw/geometry.hpp"
#include "npw/json_io.hpp"
#include "npw/momentum.hpp"
#include "npw/structure.hpp"
#include "npw/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace npw;

namespace {

py::array_t<double> tensor3_array(const std::vector<double>& data, int d) {
  py::array_t<double> out({d, d, d});
  std::copy(data.begin(), data.end(), out.mutable_data());
  return out;
}

StructureConstants constants_for(int n) {
  return compute_structure_constants(build_utility_basis(n));
}

BlockSide side_from(const std::string& name, int eps_p) {
  if (name == "auto") return eps_p > 0 ? BlockSide::upper : BlockSide::lower;
  if (name == "upper") return BlockSide::upper;
  if (name == "lower") return BlockSide::lower;
  throw std::invalid_argument("side must be auto, upper or lower");
}

py::dict report_dict(const VerificationReport& report) {
  py::list records;
  for (const auto& r : report.records) {
    records.append(py::dict(py::arg("identity") = r.identity, py::arg("residual") = r.residual,
                            py::arg("tolerance") = r.tolerance, py::arg("pass") = r.pass));
  }
  return py::dict(py::arg("records") = records, py::arg("all_pass") = report.all_pass());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "U(N)-derived spacetime algebra: hermitian bases, structure constants, "
            "generator representations, finite transformations, and momentum matrices";

  m.def("utility_basis",
        [](int n) { return build_utility_basis(n).matrices; },
        py::arg("n"),
        "Ordered orthonormal basis of N x N hermitian matrices; the last "
        "element is the time direction.");

  m.def("basis_labels",
        [](int n) {
          py::list out;
          for (const auto& l : build_utility_basis(n).labels) {
            out.append(py::dict(py::arg("family") = family_name(l.family), py::arg("a") = l.a,
                                py::arg("b") = l.b));
          }
          return out;
        },
        py::arg("n"));

  m.def("anti_rep_basis",
        [](int n) { return anti_rep(build_utility_basis(n)).matrices; },
        py::arg("n"), "Negative transposes of the utility basis, same ordering.");

  m.def("structure_constants",
        [](int n) {
          const auto sc = constants_for(n);
          return py::make_tuple(tensor3_array(sc.f_data, sc.dim()),
                                tensor3_array(sc.d_data, sc.dim()));
        },
        py::arg("n"),
        "(f, d) with [h^mu, h^lam] = i f[mu,lam,nu] h^nu and "
        "{h^mu, h^lam} = d[mu,lam,nu] h^nu.");

  m.def("expand_in_basis",
        [](const ComplexMatrix& a, int n) {
          return expand_in_basis(a, build_utility_basis(n));
        },
        py::arg("a"), py::arg("n"));

  m.def("generators_2n",
        [](int n, int eps_p, Complex c) {
          const auto g = build_2n_generators(build_utility_basis(n), eps_p, c);
          return py::dict(py::arg("j") = g.j2n, py::arg("k") = g.k2n, py::arg("p") = g.momenta(),
                          py::arg("eps_p") = g.eps_p);
        },
        py::arg("n"), py::arg("eps_p") = 1, py::arg("c") = Complex(1.0, 0.0),
        "Block generators on the doubled space, momentum blocks on the side "
        "selected by eps_p.");

  m.def("generators_n2",
        [](int n, int eps_p) {
          const auto g = build_n2_generators(constants_for(n), eps_p);
          return py::dict(py::arg("j") = g.j, py::arg("k") = g.k, py::arg("eps_p") = g.eps_p);
        },
        py::arg("n"), py::arg("eps_p") = 1,
        "Rotation and boost generators on N^2-dimensional spacetime.");

  m.def("transform_matrix",
        [](int n, const RealVector& theta, const RealVector& phi, int eps_p) {
          const auto g = build_n2_generators(constants_for(n), eps_p);
          return build_transform(g, TransformParams{theta, phi, eps_p});
        },
        py::arg("n"), py::arg("theta"), py::arg("phi"), py::arg("eps_p") = 1,
        "exp(i phi.k) exp(i theta.j) as a real N^2 x N^2 matrix.");

  m.def("transform_event",
        [](int n, const RealVector& theta, const RealVector& phi, const RealVector& x,
           int eps_p) {
          const auto g = build_n2_generators(constants_for(n), eps_p);
          const RealMatrix d = build_transform(g, TransformParams{theta, phi, eps_p});
          return transform_event(d, Event{x}).x;
        },
        py::arg("n"), py::arg("theta"), py::arg("phi"), py::arg("x"), py::arg("eps_p") = 1);

  m.def("rotation_invariance",
        [](int n, const RealVector& theta, const RealVector& x) {
          const auto g = build_n2_generators(constants_for(n), +1);
          const auto res = rotation_invariance_check(g, theta, Event{x});
          return py::make_tuple(res.distance, res.time);
        },
        py::arg("n"), py::arg("theta"), py::arg("x"),
        "(distance residual, time residual) for a finite rotation.");

  m.def("interval_first_order_change",
        [](int n, const RealVector& dphi, const RealVector& x, int eps_p) {
          return interval_first_order_change(constants_for(n), dphi, Event{x}, eps_p);
        },
        py::arg("n"), py::arg("dphi"), py::arg("x"), py::arg("eps_p") = 1);

  m.def("subspace_indices",
        [](int n) {
          const auto idx = subspace_indices(n);
          return std::vector<int>(idx.begin(), idx.end());
        },
        py::arg("n"), "Flat indices of the embedded 3+1 subspace (last one is time).");

  m.def("similarity_matrix",
        [](int n, int eps_p) { return build_similarity(build_utility_basis(n), eps_p).s; },
        py::arg("n"), py::arg("eps_p") = 1,
        "The reorganization map conjugating the N^2-rep into Kronecker pair form.");

  m.def("verify",
        [](int n, int eps_p, std::uint64_t seed, std::optional<double> tol) {
          RunConfig cfg;
          cfg.n = n;
          cfg.eps_p = eps_p;
          cfg.seed = seed;
          cfg.tolerance = tol;
          return report_dict(run_verification_suite(cfg));
        },
        py::arg("n"), py::arg("eps_p") = 1, py::arg("seed") = 1,
        py::arg("tol") = std::nullopt,
        "Run the full verification suite; returns records and the overall flag.");

  m.def("solve_momentum",
        [](int n, const std::vector<std::string>& rep, int eps_p, const std::string& side,
           double tol) {
          std::string fa = "fund", fb = "antifund", fc, fd;
          if (rep.size() == 2) {
            fc = rep[0];
            fd = rep[1];
          } else if (rep.size() == 4) {
            fa = rep[0];
            fb = rep[1];
            fc = rep[2];
            fd = rep[3];
          } else {
            throw std::invalid_argument("rep takes [C, D] or [A, B, C, D]");
          }
          const auto basis = build_utility_basis(n);
          const auto sc = compute_structure_constants(basis);
          const auto ab = combine_reps(named_factor_rep(fa, basis),
                                       named_factor_rep(fb, basis), sc, tol);
          const auto cd = combine_reps(named_factor_rep(fc, basis),
                                       named_factor_rep(fd, basis), sc, tol);
          const auto sol = solve_momentum(ab, cd, sc, eps_p, side_from(side, eps_p), tol);
          py::list solutions;
          for (const auto& p_set : sol.solutions) solutions.append(p_set);
          return py::dict(py::arg("basis_dim") = sol.basis_dim,
                          py::arg("side") = sol.side == BlockSide::upper ? "upper" : "lower",
                          py::arg("dims") = std::vector<int>{sol.dim_a, sol.dim_b, sol.dim_c,
                                                             sol.dim_d},
                          py::arg("max_relation_residual") = sol.max_relation_residual,
                          py::arg("solutions") = solutions);
        },
        py::arg("n"), py::arg("rep"), py::arg("eps_p") = 1, py::arg("side") = "auto",
        py::arg("tol") = kDefaultTol,
        "Momentum matrices on (A,B) (+) (C,D); factors named fund, antifund, "
        "sym2, antisym2, trivial, optionally bar- prefixed.");

  m.def("algebra_document_json",
        [](int n, int eps_p) { return dump_document(algebra_document(n, eps_p)); },
        py::arg("n"), py::arg("eps_p") = 1,
        "The generate-document as a JSON string (schema npw-v1).");

  m.attr("__version__") = "0.1.0";
}
