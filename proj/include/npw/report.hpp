#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace npw {

/// One verified identity: its name, the worst residual observed, and the
/// tolerance it was held to.
struct VerificationRecord {
  std::string identity;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  static VerificationRecord make(std::string name, double residual, double tolerance) {
    return {std::move(name), residual, tolerance, residual <= tolerance};
  }
};

struct VerificationReport {
  std::vector<VerificationRecord> records;

  void add(VerificationRecord r) { records.push_back(std::move(r)); }
  void add(std::string name, double residual, double tolerance) {
    records.push_back(VerificationRecord::make(std::move(name), residual, tolerance));
  }
  void merge(const VerificationReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }
  bool all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const VerificationRecord& r) { return r.pass; });
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& r : records) m = std::max(m, r.residual);
    return m;
  }
  /// Report assembly is order-independent; emit sorted by identity name.
  void sort_by_identity() {
    std::sort(records.begin(), records.end(),
              [](const VerificationRecord& a, const VerificationRecord& b) {
                return a.identity < b.identity;
              });
  }
};

}  // namespace npw
