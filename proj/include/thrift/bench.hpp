#pragma once
// Sweep engine: best-formula landscapes at fixed gate budget, minimal steps
// to an error threshold, power-law fits, CSV output.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thrift/depth.hpp"
#include "thrift/formulas.hpp"
#include "thrift/models.hpp"

namespace thrift {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  ModelSpec model;
  std::string metric = "worst_case";  // or "avg_infidelity"
  double epsilon = 0.01;
  std::vector<double> alphas;
  std::vector<double> Ts;
  long long budget = 0;
  std::vector<FormulaKind> formulas;
  long long N_max = 4096;
  std::string output;
  std::uint64_t rng_seed = 0;
  std::string engine = "auto";  // dense | flo | auto
  // scaling-sweep extras
  std::vector<int> L_values;
  double T_per_L = 1.0;
  bool serial = false;  // force the serial reference sweep path
};

// Parses the JSON config text; unknown keys rejected (ConfigError).
SweepConfig parse_sweep_config(const std::string& json_text);

struct SweepRow {
  std::string model, engine;
  std::uint64_t seed = 0;
  double alpha = 0, T = 0;
  long long budget = 0;
  std::string formula;
  long long steps = 0, two_qubit_depth = 0, cnot_depth = 0;
  std::string metric;
  double error = 0;
  bool is_best = false;
};

// Chooses dense or free-fermion per config ("auto" prefers dense under the
// cap, then the TFIM worst-case fast path); throws CapabilityError otherwise.
std::string resolve_engine(const SweepConfig& cfg);

// Error of one formula at N steps under the chosen engine.
double error_at(const PartitionedHamiltonian& part, FormulaKind f, double T,
                long long N, const std::string& metric, const std::string& engine);

std::vector<SweepRow> landscape(const SweepConfig& cfg);

std::optional<long long> min_steps(const PartitionedHamiltonian& part, FormulaKind f,
                                   double T, double epsilon, const std::string& metric,
                                   const std::string& engine, long long N_max);

struct ScalingRow {
  std::string model, engine, formula;
  std::uint64_t seed = 0;
  int L = 0;
  double alpha = 0, T = 0, epsilon = 0;
  long long steps = 0, two_qubit_depth = 0, cnot_depth = 0;
  double weight = 0;  // fit weight from the +-1-step depth uncertainty
  bool found = false;
};

std::vector<ScalingRow> scaling_sweep(const SweepConfig& cfg);

struct FitResult {
  double a = 0, k = 0;
  double cov[2][2] = {{0, 0}, {0, 0}};  // (log a, k) covariance
  int points_used = 0;
};

// Weighted least squares of log d = log a + k log L.
FitResult powerlaw_fit(const std::vector<std::array<double, 3>>& points);  // (L, d, w)

std::string landscape_csv(const std::vector<SweepRow>& rows, bool timestamp_header = true);
std::string scaling_csv(const std::vector<ScalingRow>& rows, bool timestamp_header = true);

}  // namespace thrift
