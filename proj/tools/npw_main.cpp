#include "npw/algebra.hpp"
#include "npw/basis.hpp"
#include "npw/geometry.hpp"
#include "npw/json_io.hpp"
#include "npw/momentum.hpp"
#include "npw/structure.hpp"
#include "npw/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  int n = 2;
  int eps_p = 1;
  double tol = npw::kDefaultTol;
  bool tol_given = false;
  std::uint64_t seed = 1;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--n", opts.n, "Matrix dimension N")->check(CLI::Range(1, 64));
  cmd->add_option("--eps-p", opts.eps_p, "Momentum block side label, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  cmd->add_option("--tol", opts.tol, "Tolerance override for every check")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "Seed for randomized property trials");
  cmd->add_option("--out", opts.out, "Output JSON path");
}

// --tol beats NPW_TOL beats the per-family defaults.
std::optional<double> tolerance_override(const CLI::App* cmd, const CommonOpts& opts) {
  if (cmd->count("--tol") > 0) return opts.tol;
  if (const char* env = std::getenv("NPW_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("NPW_TOL must be a positive number");
  }
  return std::nullopt;
}

std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

int run_generate(const CLI::App* cmd, const CommonOpts& opts) {
  (void)cmd;
  if (opts.out.empty()) {
    std::cerr << "generate: --out is required\n";
    return kExitUsage;
  }
  npw::write_document(npw::algebra_document(opts.n, opts.eps_p), opts.out);
  std::cout << "wrote algebra document for N=" << opts.n << " to " << opts.out << "\n";
  return kExitPass;
}

int run_verify(const CLI::App* cmd, const CommonOpts& opts, bool inject_fault_d) {
  npw::RunConfig cfg;
  cfg.n = opts.n;
  cfg.eps_p = opts.eps_p;
  cfg.tolerance = tolerance_override(cmd, opts);
  cfg.seed = opts.seed;
  cfg.output_path = opts.out;

  npw::FaultInjection fault;
  fault.perturb_d = inject_fault_d;

  const npw::Json doc = npw::verification_document(cfg, fault);
  const npw::VerificationReport report = npw::report_from_json(doc);

  std::cout << "verification suite: N=" << cfg.n << " eps_p=" << (cfg.eps_p > 0 ? "+1" : "-1")
            << " seed=" << cfg.seed << "\n";
  for (const auto& r : report.records) {
    std::cout << (r.pass ? "  pass  " : "  FAIL  ") << std::left << std::setw(34) << r.identity
              << " residual " << std::scientific << std::setprecision(3) << r.residual
              << " tolerance " << r.tolerance << std::defaultfloat << "\n";
  }
  const bool ok = report.all_pass();
  std::cout << (ok ? "all identities hold" : "verification FAILED") << " (" << report.records.size()
            << " families)\n";
  if (!opts.out.empty()) npw::write_document(doc, opts.out);
  return ok ? kExitPass : kExitVerifyFail;
}

int run_transform(const CommonOpts& opts, const std::vector<double>& theta,
                  const std::vector<double>& phi, const std::vector<double>& x) {
  const int d = opts.n * opts.n;
  auto to_vector = [&](const std::vector<double>& raw, const char* name) {
    if (!raw.empty() && static_cast<int>(raw.size()) != d) {
      throw std::invalid_argument(std::string(name) + " needs " + std::to_string(d) +
                                  " comma-separated components");
    }
    npw::RealVector v = npw::RealVector::Zero(d);
    for (std::size_t i = 0; i < raw.size(); ++i) v(static_cast<int>(i)) = raw[i];
    return v;
  };
  const npw::RealVector theta_v = to_vector(theta, "--theta");
  const npw::RealVector phi_v = to_vector(phi, "--phi");
  if (static_cast<int>(x.size()) != d) {
    throw std::invalid_argument("--x needs " + std::to_string(d) + " comma-separated components");
  }
  npw::Event event;
  event.x = to_vector(x, "--x");

  const npw::HermitianBasis basis = npw::build_utility_basis(opts.n);
  const npw::StructureConstants sc = npw::compute_structure_constants(basis);
  const npw::GeneratorSetN2 gn2 = npw::build_n2_generators(sc, opts.eps_p);
  const npw::RealMatrix dmat =
      npw::build_transform(gn2, npw::TransformParams{theta_v, phi_v, opts.eps_p});
  const npw::Event moved = npw::transform_event(dmat, event);

  double dist_before = 0.0, dist_after = 0.0;
  for (int i = 0; i + 1 < d; ++i) {
    dist_before += event.x(i) * event.x(i);
    dist_after += moved.x(i) * moved.x(i);
  }
  std::cout << "x':";
  for (int i = 0; i < d; ++i) std::cout << " " << format_real(moved.x(i));
  std::cout << "\n";
  std::cout << "delta distance^2: " << format_real(dist_after - dist_before) << "\n";
  std::cout << "delta time:       " << format_real(moved.x(d - 1) - event.x(d - 1)) << "\n";
  std::cout << "delta interval^2: "
            << format_real(npw::spacetime_interval(moved) - npw::spacetime_interval(event))
            << "\n";

  if (!opts.out.empty()) {
    auto reals = [](const npw::RealVector& v) {
      npw::Json arr = npw::Json::array();
      for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
      return arr;
    };
    npw::Json matrix = npw::Json::array();
    for (int r = 0; r < d; ++r) matrix.push_back(reals(dmat.row(r).transpose()));
    npw::write_document(
        npw::Json{{"schema", npw::kSchema},
                  {"kind", "transform"},
                  {"n", opts.n},
                  {"eps_p", opts.eps_p},
                  {"theta", reals(theta_v)},
                  {"phi", reals(phi_v)},
                  {"x", reals(event.x)},
                  {"x_prime", reals(moved.x)},
                  {"matrix", matrix},
                  {"delta_distance_sq", dist_after - dist_before},
                  {"delta_time", moved.x(d - 1) - event.x(d - 1)},
                  {"delta_interval_sq",
                   npw::spacetime_interval(moved) - npw::spacetime_interval(event)}},
        opts.out);
  }
  return kExitPass;
}

int run_momentum(const CLI::App* cmd, const CommonOpts& opts, const std::string& rep_spec,
                 const std::string& side_name) {
  std::vector<std::string> tokens;
  std::stringstream ss(rep_spec);
  std::string item;
  while (std::getline(ss, item, ',')) tokens.push_back(item);

  std::string fa = "fund", fb = "antifund", fc, fd;
  if (tokens.size() == 2) {
    fc = tokens[0];
    fd = tokens[1];
  } else if (tokens.size() == 4) {
    fa = tokens[0];
    fb = tokens[1];
    fc = tokens[2];
    fd = tokens[3];
  } else {
    throw std::invalid_argument(
        "--rep takes \"C,D\" (with (A,B) = fund,antifund) or \"A,B,C,D\"");
  }
  npw::BlockSide side;
  if (side_name == "auto") {
    side = opts.eps_p > 0 ? npw::BlockSide::upper : npw::BlockSide::lower;
  } else if (side_name == "upper") {
    side = npw::BlockSide::upper;
  } else if (side_name == "lower") {
    side = npw::BlockSide::lower;
  } else {
    throw std::invalid_argument("--side must be auto, upper or lower");
  }

  const npw::HermitianBasis basis = npw::build_utility_basis(opts.n);
  const npw::StructureConstants sc = npw::compute_structure_constants(basis);
  const double tol = tolerance_override(cmd, opts).value_or(npw::kDefaultTol);
  const npw::CombinedRep rep_ab = npw::combine_reps(npw::named_factor_rep(fa, basis),
                                                    npw::named_factor_rep(fb, basis), sc, tol);
  const npw::CombinedRep rep_cd = npw::combine_reps(npw::named_factor_rep(fc, basis),
                                                    npw::named_factor_rep(fd, basis), sc, tol);
  const npw::MomentumSolution sol = npw::solve_momentum(rep_ab, rep_cd, sc, opts.eps_p, side, tol);

  std::cout << "rep pairing (" << fa << "," << fb << ") (+) (" << fc << "," << fd
            << "), side=" << (side == npw::BlockSide::upper ? "upper" : "lower")
            << ", eps_p=" << (opts.eps_p > 0 ? "+1" : "-1") << "\n";
  std::cout << "basis_dim: " << sol.basis_dim << "\n";
  if (sol.basis_dim == 0) {
    std::cout << "no momentum matrices for this rep pairing\n";
  } else {
    std::cout << "max relation residual: " << format_real(sol.max_relation_residual) << "\n";
  }
  if (!opts.out.empty()) npw::write_document(npw::momentum_to_json(sol), opts.out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"npw: build and machine-verify the U(N)-derived spacetime algebra, its "
               "generator representations, transformations, and momentum matrices"};
  app.require_subcommand(1);

  CommonOpts gen_opts, verify_opts, transform_opts, momentum_opts;
  bool inject_fault_d = false;
  std::vector<double> theta, phi, x;
  std::string rep_spec, side_name = "auto";

  CLI::App* cmd_generate =
      app.add_subcommand("generate", "Write basis, structure constants and generators as JSON");
  add_common(cmd_generate, gen_opts);

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the full verification suite");
  add_common(cmd_verify, verify_opts);
  cmd_verify->add_flag("--inject-fault-d", inject_fault_d)->group("");

  CLI::App* cmd_transform =
      app.add_subcommand("transform", "Apply a rotation/boost to an event and print it");
  add_common(cmd_transform, transform_opts);
  cmd_transform->add_option("--theta", theta, "Rotation angles, N^2 comma-separated reals")
      ->delimiter(',');
  cmd_transform->add_option("--phi", phi, "Boost parameters, N^2 comma-separated reals")
      ->delimiter(',');
  cmd_transform->add_option("--x", x, "Event coordinates, N^2 comma-separated reals")
      ->delimiter(',')
      ->required();

  CLI::App* cmd_momentum =
      app.add_subcommand("momentum", "Solve for momentum matrices on a direct-sum rep");
  add_common(cmd_momentum, momentum_opts);
  cmd_momentum->add_option("--rep", rep_spec, "Factor reps: \"C,D\" or \"A,B,C,D\"")->required();
  cmd_momentum->add_option("--side", side_name, "Momentum block side: auto, upper or lower");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cmd_generate->parsed()) return run_generate(cmd_generate, gen_opts);
    if (cmd_verify->parsed()) return run_verify(cmd_verify, verify_opts, inject_fault_d);
    if (cmd_transform->parsed()) return run_transform(transform_opts, theta, phi, x);
    if (cmd_momentum->parsed()) return run_momentum(cmd_momentum, momentum_opts, rep_spec, side_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
