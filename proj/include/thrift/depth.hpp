#pragma once
// Gate-depth accounting: affine per-step depth formulas per (model, formula)
// pair, loaded from a versioned registry file, plus budget-to-steps.

#include <optional>
#include <string>
#include <vector>

#include "thrift/formulas.hpp"
#include "thrift/models.hpp"

namespace thrift {

struct DepthFormula {
  ModelKind model;
  FormulaKind formula;
  long long a = 0, b = 0;  // two-qubit depth aN + b
  long long c = 0, d = 0;  // cnot depth cN + d
  bool exceeds_any_budget = false;  // marker rows excluded from step tables
};

class DepthRegistry {
 public:
  // Loads <data_dir>/depth_registry.csv.
  static const DepthRegistry& instance();
  explicit DepthRegistry(const std::string& path);

  const DepthFormula& lookup(ModelKind m, FormulaKind f) const;
  bool has(ModelKind m, FormulaKind f) const;
  const std::vector<DepthFormula>& rows() const { return rows_; }

 private:
  std::vector<DepthFormula> rows_;
};

// Evaluated depths at step count N.
std::pair<long long, long long> depth(ModelKind m, FormulaKind f, long long N);

// Largest N with two-qubit depth(N) <= budget; 0 if even N=1 exceeds it.
long long steps_for_budget(ModelKind m, FormulaKind f, long long budget);

}  // namespace thrift
