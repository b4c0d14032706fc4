#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsgp/checked.hpp"

namespace nsgp {

enum class Check {
  Catenary,
  Tame,
  Omega,
  Frobenius,
  Apery,
  MaxLen,
  Betti,
  MinMult,
  Bounds,
  H1,
  TauIdentity,
};

std::string check_name(Check c);
std::optional<Check> check_from_name(std::string_view name);
const std::vector<Check>& all_checks();

struct SweepConfig {
  Int a_lo = 2, a_hi = 2;
  Int h_lo = 1, h_hi = 1;
  Int d_lo = 1, d_hi = 1;
  /// Explicit x values; empty means all of 1..a-1.
  std::vector<Int> x_values;
  std::vector<Check> checks = all_checks();
  int workers = 1;
  std::chrono::milliseconds tuple_budget{10000};
};

enum class RowStatus { Pass, Fail, Timeout };

/// One row of harness output: a closed-form value next to its oracle value,
/// with a witness when they disagree.
struct InvariantReport {
  Int a = 0, h = 0, d = 0, x = 0;
  std::string check;
  std::string formula_value;
  std::string oracle_value;
  RowStatus status = RowStatus::Pass;
  std::string witness;
  std::int64_t elapsed_ms = 0;

  bool equal() const { return status == RowStatus::Pass; }
};

struct SweepSummary {
  std::int64_t tuples = 0;
  std::int64_t skipped = 0;  // tuples with gcd(a, d) != 1
  std::int64_t rows = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t timeouts = 0;
};

struct SweepResult {
  std::vector<InvariantReport> rows;
  SweepSummary summary;

  bool ok() const { return summary.failed == 0; }
};

/// Runs every requested check on every valid tuple of the configured grid.
/// Tuples with gcd(a, d) != 1 are skipped and counted.  Row order is fixed:
/// tuples in lexicographic (a, h, d, x) order, checks in enum order,
/// regardless of worker count.  Per-row failures are data, never exceptions.
SweepResult run_sweep(const SweepConfig& config);

/// The almost-arithmetic monoid <6,9,11>, where the least multiple of the
/// smallest generator lying in the rest is 3 but the catenary degree is 4:
/// the general lower bound is strict outside the generalized-arithmetic
/// class.
InvariantReport counterexample_check();

std::string report_json(const SweepResult& result);
std::string report_csv(const SweepResult& result);
std::string report_text(const SweepResult& result);

}  // namespace nsgp
