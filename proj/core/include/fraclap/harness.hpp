#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fraclap/report.hpp"

namespace fraclap {

/// Parameters shared by every experiment. Unset fields take the experiment's
/// defaults; experiments ignore parameters they do not use.
struct ExperimentConfig {
  std::optional<double> s;
  std::optional<int> n;
  std::optional<int> N;
  ToleranceOverrides tolerances;
};

struct ExperimentDefaults {
  double s = 0.5;
  int n = 1;
  std::optional<int> N;  ///< grid size, solver-based experiments only
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  ExperimentDefaults defaults;
  std::function<ExperimentReport(const ExperimentConfig&)> run;
};

/// Every registered experiment, in a fixed order.
[[nodiscard]] const std::vector<ExperimentInfo>& experiments();

/// nullptr if no experiment has this name.
[[nodiscard]] const ExperimentInfo* find_experiment(const std::string& name);

ExperimentReport exp_ball_identity(const ExperimentConfig& cfg);
ExperimentReport exp_halfspace_harmonicity(const ExperimentConfig& cfg);
ExperimentReport exp_kelvin_identity(const ExperimentConfig& cfg);
ExperimentReport exp_solver_convergence(const ExperimentConfig& cfg);
ExperimentReport exp_boundary_bounds(const ExperimentConfig& cfg);
ExperimentReport exp_boundary_behavior(const ExperimentConfig& cfg);
ExperimentReport exp_interior_blowup(const ExperimentConfig& cfg);
ExperimentReport exp_lapsdeltas(const ExperimentConfig& cfg);
ExperimentReport exp_v_equation(const ExperimentConfig& cfg);
ExperimentReport exp_product_rule(const ExperimentConfig& cfg);
ExperimentReport exp_barriers(const ExperimentConfig& cfg);
ExperimentReport exp_extension(const ExperimentConfig& cfg);
ExperimentReport exp_norms(const ExperimentConfig& cfg);
ExperimentReport exp_half_order_log(const ExperimentConfig& cfg);

}  // namespace fraclap
