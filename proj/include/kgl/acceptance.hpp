#pragma once

// The acceptance grid: eleven exact checks, each reported as one line.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kgl {

struct AcceptanceConfig {
  /// 2 reproduces the full grids; smaller values shrink every grid.
  int grid_radius = 2;
  std::uint64_t seed = 20240611;
  /// Runs criterion 8 with the fault-injected toric coefficient rule.
  bool corrupt_toric_rule = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  std::optional<double> budget_seconds;  // wall-clock limit, full grid only
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

/// "PASS  1  name  detail  (0.12 s)"
std::string format_result(const CriterionResult& result);

}  // namespace kgl
