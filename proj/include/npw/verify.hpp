#pragma once

#include "npw/json_io.hpp"
#include "npw/report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace npw {

struct RunConfig {
  int n = 2;
  int eps_p = +1;
  /// When set, replaces every per-family default tolerance.
  std::optional<double> tolerance;
  std::uint64_t seed = 1;
  std::string output_path;
};

/// Test hook: nudge one entry of d after extraction, so the [P,K] family
/// (and everything downstream of d) must fail.
struct FaultInjection {
  bool perturb_d = false;
  double amount = 1e-3;
};

/// Run every verification family for one (n, eps_p): basis orthonormality
/// and traces, structure symmetries, time-index identities, the full
/// commutator suites in both reps, the coefficient-extraction cross-check,
/// finite covariance and rotation-invariance property trials, subspace
/// interval invariance, and the similarity identities. Records are sorted
/// by identity name.
VerificationReport run_verification_suite(const RunConfig& cfg,
                                          const FaultInjection& fault = {});

/// The full report document for run_verification_suite; identical configs
/// and seeds serialize byte-identically.
Json verification_document(const RunConfig& cfg, const FaultInjection& fault = {});

}  // namespace npw
