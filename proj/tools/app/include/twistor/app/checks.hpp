#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <twistor/cp3.hpp>

namespace twistor::app {

/// Outcome of one named claim check. `residual` is the quantity compared
/// against the check's tolerance; `paper_value` is the literal published
/// number where one exists, shown beside `measured_value`.
struct CheckRecord {
  std::string name;
  bool passed = false;
  std::optional<Real> residual;
  std::optional<Real> paper_value;
  std::optional<Real> measured_value;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Eigenvalue convention for the CP^3 correspondence. Minus is a negative
  /// control: the correspondence checks are expected to fail with it.
  EigenSign sign = EigenSign::Plus;
};

std::vector<CheckRecord> run_checks(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckRecord>& records);

/// Array of {name, status, residual, paper_value, measured_value}; absent
/// values are null, status is "pass" or "fail".
std::string checks_to_json(const std::vector<CheckRecord>& records);
std::string checks_to_text(const std::vector<CheckRecord>& records);

}  // namespace twistor::app
