#pragma once

#include "npw/algebra.hpp"
#include "npw/basis.hpp"
#include "npw/momentum.hpp"
#include "npw/report.hpp"
#include "npw/structure.hpp"

#include <json.hpp>

#include <string>

namespace npw {

/// Every exported document carries this schema tag. Complex scalars are
/// two-element arrays [re, im]; matrices are row-major nested arrays.
inline constexpr const char* kSchema = "npw-v1";

using Json = nlohmann::json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json matrix_list_to_json(const std::vector<ComplexMatrix>& ms);
std::vector<ComplexMatrix> matrix_list_from_json(const Json& j);

Json label_to_json(const BasisLabel& label);
BasisLabel label_from_json(const Json& j);

Json basis_to_json(const HermitianBasis& basis);
HermitianBasis basis_from_json(const Json& j);

Json structure_to_json(const StructureConstants& sc);
StructureConstants structure_from_json(const Json& j);

Json generators_2n_to_json(const GeneratorSet2N& g);
GeneratorSet2N generators_2n_from_json(const Json& j);

Json generators_n2_to_json(const GeneratorSetN2& g);
GeneratorSetN2 generators_n2_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

Json momentum_to_json(const MomentumSolution& sol);
MomentumSolution momentum_from_json(const Json& j);

/// The `generate` document: basis, anti-rep, structure constants and both
/// generator representations for one (n, eps_p).
Json algebra_document(int n, int eps_p);

/// Canonical serialization used for every file this library writes;
/// deterministic byte-for-byte for equal inputs.
std::string dump_document(const Json& j);

void write_document(const Json& j, const std::string& path);

}  // namespace npw
