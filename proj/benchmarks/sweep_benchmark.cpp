// Times the landscape sweep with the parallel (OpenMP) grid loop against the
// serial reference path and checks that both produce identical rows.

#include <chrono>
#include <cstdio>

#include "thrift/bench.hpp"

using namespace thrift;

namespace {

double time_once(const SweepConfig& cfg, std::string* body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SweepRow> rows = landscape(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  *body = landscape_csv(rows, false);
  return secs;
}

}  // namespace

int main() {
  SweepConfig cfg;
  cfg.model = {ModelKind::tfim_1d, 8, 0, 1.0, 0.0};
  cfg.metric = "worst_case";
  cfg.budget = 31;
  cfg.formulas = {FormulaKind::trotter1, FormulaKind::trotter2, FormulaKind::trotter4,
                  FormulaKind::thrift1, FormulaKind::thrift2, FormulaKind::thrift4,
                  FormulaKind::omelyan_small_a4};
  for (int i = 0; i < 6; ++i) cfg.alphas.push_back(0.02 * (i + 1));
  for (int i = 0; i < 4; ++i) cfg.Ts.push_back(0.5 * (i + 1));

  SweepConfig serial = cfg;
  serial.serial = true;

  std::string parallel_body, serial_body;
  // warm-up pass so one-time registry/file loads don't skew the timing
  time_once(serial, &serial_body);

  const double t_serial = time_once(serial, &serial_body);
  const double t_parallel = time_once(cfg, &parallel_body);

  std::printf("grid points: %zu, formulas: %zu\n", cfg.alphas.size() * cfg.Ts.size(),
              cfg.formulas.size());
  std::printf("serial sweep:   %8.3f s\n", t_serial);
  std::printf("parallel sweep: %8.3f s\n", t_parallel);
  std::printf("speedup:        %8.2fx\n", t_serial / t_parallel);
  if (parallel_body != serial_body) {
    std::printf("MISMATCH: parallel and serial sweeps disagree\n");
    return 1;
  }
  std::printf("outputs identical: yes\n");
  return 0;
}
