#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sympsum {

/// Outcome of one verification check. PASS semantics depend on the check:
/// residual checks require max_residual under their threshold and zero
/// violations; Monte Carlo checks require |estimate - expected| <= 3 std_error.
/// Serialization is canonical: fixed field order, floats at 17 significant
/// digits, so identical runs produce identical bytes (elapsed_seconds can be
/// excluded for byte comparisons).
struct VerificationReport {
  std::string name;
  std::string params;
  std::uint64_t seed = 0;
  long long samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  long long violations = 0;
  std::optional<double> estimate;
  std::optional<double> std_error;
  std::optional<double> expected;
  bool passed = false;
  std::string note;
  double elapsed_seconds = 0.0;

  std::string status() const { return passed ? "PASS" : "FAIL"; }
  std::string to_json(bool include_elapsed = true) const;
  std::string to_csv(bool include_elapsed = true) const;
  std::string to_text() const;
  static std::string csv_header(bool include_elapsed = true);
};

}  // namespace sympsum
