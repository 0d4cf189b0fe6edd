#include "thrift/depth.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thrift {

DepthRegistry::DepthRegistry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("depth registry missing: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string model, formula, a, b, c, d;
    if (!std::getline(ss, model, ',') || !std::getline(ss, formula, ',') ||
        !std::getline(ss, a, ',') || !std::getline(ss, b, ',') ||
        !std::getline(ss, c, ',') || !std::getline(ss, d, ','))
      throw std::runtime_error("malformed depth registry line: " + line);
    if (model == "model") continue;  // header
    DepthFormula row;
    row.model = model_kind_from_name(model);
    row.formula = formula_kind_from_name(formula);
    row.a = std::stoll(a);
    row.b = std::stoll(b);
    row.c = std::stoll(c);
    row.d = std::stoll(d);
    rows_.push_back(row);
  }
}

const DepthRegistry& DepthRegistry::instance() {
  static DepthRegistry reg(data_dir() + "/depth_registry.csv");
  return reg;
}

bool DepthRegistry::has(ModelKind m, FormulaKind f) const {
  for (const auto& r : rows_)
    if (r.model == m && r.formula == f) return true;
  return false;
}

const DepthFormula& DepthRegistry::lookup(ModelKind m, FormulaKind f) const {
  for (const auto& r : rows_)
    if (r.model == m && r.formula == f) return r;
  throw std::invalid_argument("no depth formula registered for (" + model_kind_name(m) +
                              ", " + formula_kind_name(f) + ")");
}

std::pair<long long, long long> depth(ModelKind m, FormulaKind f, long long N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const auto& r = DepthRegistry::instance().lookup(m, f);
  return {r.a * N + r.b, r.c * N + r.d};
}

long long steps_for_budget(ModelKind m, FormulaKind f, long long budget) {
  const auto& r = DepthRegistry::instance().lookup(m, f);
  if (r.a * 1 + r.b > budget) return 0;
  return (budget - r.b) / r.a;
}

}  // namespace thrift
