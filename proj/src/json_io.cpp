#include "npw/json_io.hpp"

#include <fstream>

namespace npw {

namespace {

void require_schema(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchema) {
    throw std::invalid_argument("document does not carry schema '" + std::string(kSchema) + "'");
  }
}

Json tensor3_to_json(const std::vector<double>& data, int d) {
  Json out = Json::array();
  std::size_t pos = 0;
  for (int mu = 0; mu < d; ++mu) {
    Json plane = Json::array();
    for (int la = 0; la < d; ++la) {
      Json row = Json::array();
      for (int nu = 0; nu < d; ++nu) row.push_back(data[pos++]);
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

std::vector<double> tensor3_from_json(const Json& j) {
  std::vector<double> data;
  for (const auto& plane : j) {
    for (const auto& row : plane) {
      for (const auto& v : row) data.push_back(v.get<double>());
    }
  }
  return data;
}

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j.at(r).at(c));
  }
  return m;
}

Json matrix_list_to_json(const std::vector<ComplexMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

std::vector<ComplexMatrix> matrix_list_from_json(const Json& j) {
  std::vector<ComplexMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

Json label_to_json(const BasisLabel& label) {
  return Json{{"family", family_name(label.family)}, {"a", label.a}, {"b", label.b}};
}

BasisLabel label_from_json(const Json& j) {
  return {family_from_name(j.at("family").get<std::string>()), j.at("a").get<int>(),
          j.at("b").get<int>()};
}

Json basis_to_json(const HermitianBasis& basis) {
  Json labels = Json::array();
  for (const auto& l : basis.labels) labels.push_back(label_to_json(l));
  return Json{{"schema", kSchema},
              {"kind", "hermitian-basis"},
              {"n", basis.n},
              {"utility", basis.utility},
              {"labels", std::move(labels)},
              {"matrices", matrix_list_to_json(basis.matrices)}};
}

HermitianBasis basis_from_json(const Json& j) {
  require_schema(j);
  HermitianBasis basis;
  basis.n = j.at("n").get<int>();
  basis.utility = j.at("utility").get<bool>();
  for (const auto& l : j.at("labels")) basis.labels.push_back(label_from_json(l));
  basis.matrices = matrix_list_from_json(j.at("matrices"));
  return basis;
}

Json structure_to_json(const StructureConstants& sc) {
  return Json{{"schema", kSchema},
              {"kind", "structure-constants"},
              {"n", sc.n},
              {"utility_rep", sc.utility_rep},
              {"index_order",
               "f[mu][lambda][nu]: [h^mu, h^lambda] = i f^{mu lambda nu} h^nu; "
               "d[mu][lambda][nu]: {h^mu, h^lambda} = d^{mu lambda nu} h^nu"},
              {"f", tensor3_to_json(sc.f_data, sc.dim())},
              {"d", tensor3_to_json(sc.d_data, sc.dim())}};
}

StructureConstants structure_from_json(const Json& j) {
  require_schema(j);
  StructureConstants sc;
  sc.n = j.at("n").get<int>();
  sc.utility_rep = j.at("utility_rep").get<bool>();
  sc.f_data = tensor3_from_json(j.at("f"));
  sc.d_data = tensor3_from_json(j.at("d"));
  return sc;
}

Json generators_2n_to_json(const GeneratorSet2N& g) {
  return Json{{"schema", kSchema},
              {"kind", "generators-2n"},
              {"n", g.n},
              {"eps_p", g.eps_p},
              {"c_plus", complex_to_json(g.c_plus)},
              {"c_minus", complex_to_json(g.c_minus)},
              {"j", matrix_list_to_json(g.j2n)},
              {"k", matrix_list_to_json(g.k2n)},
              {"p_plus", matrix_list_to_json(g.p_plus)},
              {"p_minus", matrix_list_to_json(g.p_minus)}};
}

GeneratorSet2N generators_2n_from_json(const Json& j) {
  require_schema(j);
  GeneratorSet2N g;
  g.n = j.at("n").get<int>();
  g.eps_p = j.at("eps_p").get<int>();
  g.c_plus = complex_from_json(j.at("c_plus"));
  g.c_minus = complex_from_json(j.at("c_minus"));
  g.j2n = matrix_list_from_json(j.at("j"));
  g.k2n = matrix_list_from_json(j.at("k"));
  g.p_plus = matrix_list_from_json(j.at("p_plus"));
  g.p_minus = matrix_list_from_json(j.at("p_minus"));
  return g;
}

Json generators_n2_to_json(const GeneratorSetN2& g) {
  return Json{{"schema", kSchema},
              {"kind", "generators-n2"},
              {"n", g.n},
              {"eps_p", g.eps_p},
              {"j", matrix_list_to_json(g.j)},
              {"k", matrix_list_to_json(g.k)}};
}

GeneratorSetN2 generators_n2_from_json(const Json& j) {
  require_schema(j);
  GeneratorSetN2 g;
  g.n = j.at("n").get<int>();
  g.eps_p = j.at("eps_p").get<int>();
  g.j = matrix_list_from_json(j.at("j"));
  g.k = matrix_list_from_json(j.at("k"));
  return g;
}

Json report_to_json(const VerificationReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back(Json{{"identity", r.identity},
                           {"residual", r.residual},
                           {"tolerance", r.tolerance},
                           {"pass", r.pass}});
  }
  return Json{{"schema", kSchema},
              {"kind", "verification-report"},
              {"records", std::move(records)},
              {"all_pass", report.all_pass()}};
}

VerificationReport report_from_json(const Json& j) {
  require_schema(j);
  VerificationReport report;
  for (const auto& r : j.at("records")) {
    report.records.push_back({r.at("identity").get<std::string>(),
                              r.at("residual").get<double>(),
                              r.at("tolerance").get<double>(), r.at("pass").get<bool>()});
  }
  return report;
}

Json momentum_to_json(const MomentumSolution& sol) {
  Json solutions = Json::array();
  for (const auto& p_set : sol.solutions) solutions.push_back(matrix_list_to_json(p_set));
  return Json{{"schema", kSchema},
              {"kind", "momentum-solution"},
              {"n", sol.n},
              {"eps_p", sol.eps_p},
              {"side", sol.side == BlockSide::upper ? "upper" : "lower"},
              {"dims", Json{{"a", sol.dim_a}, {"b", sol.dim_b}, {"c", sol.dim_c}, {"d", sol.dim_d}}},
              {"basis_dim", sol.basis_dim},
              {"max_relation_residual", sol.max_relation_residual},
              {"solutions", std::move(solutions)}};
}

MomentumSolution momentum_from_json(const Json& j) {
  require_schema(j);
  MomentumSolution sol;
  sol.n = j.at("n").get<int>();
  sol.eps_p = j.at("eps_p").get<int>();
  sol.side = j.at("side").get<std::string>() == "upper" ? BlockSide::upper : BlockSide::lower;
  sol.dim_a = j.at("dims").at("a").get<int>();
  sol.dim_b = j.at("dims").at("b").get<int>();
  sol.dim_c = j.at("dims").at("c").get<int>();
  sol.dim_d = j.at("dims").at("d").get<int>();
  sol.basis_dim = j.at("basis_dim").get<int>();
  sol.max_relation_residual = j.at("max_relation_residual").get<double>();
  for (const auto& p_set : j.at("solutions")) {
    sol.solutions.push_back(matrix_list_from_json(p_set));
  }
  return sol;
}

Json algebra_document(int n, int eps_p) {
  const HermitianBasis basis = build_utility_basis(n);
  const StructureConstants sc = compute_structure_constants(basis);
  return Json{{"schema", kSchema},
              {"kind", "algebra"},
              {"n", n},
              {"eps_p", eps_p},
              {"basis", basis_to_json(basis)},
              {"anti_rep", basis_to_json(anti_rep(basis))},
              {"index_order",
               "f[mu][lambda][nu]: [h^mu, h^lambda] = i f^{mu lambda nu} h^nu; "
               "d[mu][lambda][nu]: {h^mu, h^lambda} = d^{mu lambda nu} h^nu"},
              {"f", tensor3_to_json(sc.f_data, sc.dim())},
              {"d", tensor3_to_json(sc.d_data, sc.dim())},
              {"generators_2n", generators_2n_to_json(build_2n_generators(basis, eps_p))},
              {"generators_n2", generators_n2_to_json(build_n2_generators(sc, eps_p))}};
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

void write_document(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << dump_document(j);
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

}  // namespace npw
