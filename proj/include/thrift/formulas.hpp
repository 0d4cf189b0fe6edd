#pragma once
// Product-formula schedules (Trotter 1/2/4/opt-8, Omelyan small-A, THRIFT
// 1/2/4/opt-8) and their dense evaluation, plus the first-order THRIFT
// error bound and the time-ordered-exponential identity check.

#include <string>
#include <vector>

#include "thrift/exact.hpp"
#include "thrift/models.hpp"

namespace thrift {

enum class FormulaKind {
  trotter1, trotter2, trotter4, trotter8_opt,
  omelyan_small_a4,
  thrift1, thrift2, thrift4, thrift8_opt,
  magnus_thrift1, magnus_thrift2,
};

std::string formula_kind_name(FormulaKind k);
FormulaKind formula_kind_from_name(const std::string& s);

struct Generator {
  std::string id;
  PauliSum h;
};

// Ordered factor list; FIRST element is the LEFTMOST operator factor.
// Factor j realizes exp(-i * multiplier_j * dt * H_{gen_j}).
struct Schedule {
  std::vector<Generator> generators;
  std::vector<std::pair<int, double>> steps;  // (generator index, multiplier)

  void append(int gen, double mult) { steps.emplace_back(gen, mult); }
  // Appends an inner schedule scaled by s (shared generator table).
  void append_scaled(const std::vector<std::pair<int, double>>& inner, double s) {
    for (auto [g, m] : inner) steps.emplace_back(g, m * s);
  }
};

// Fourth-order "small-A" splitting constants.
inline constexpr double kOmelyanA1 = 0.5316386245813512;
inline constexpr double kOmelyanB1 = -0.04375142191737413;
inline constexpr double kOmelyanA2 = -0.3086019704406066;
inline constexpr double kOmelyanB2 = 0.5 - kOmelyanB1;
inline constexpr double kOmelyanA3 = 1.0 - 2.0 * (kOmelyanA1 + kOmelyanA2);

// Suzuki fourth-order coefficient s2 = 1/(4 - 4^{1/3}).
double suzuki_s2();

// Coefficients omega_0..omega_7 of the optimised eighth-order composition,
// loaded from <data_dir>/trotter8_coefficients.txt. Throws if absent.
std::vector<double> load_order8_coefficients();
bool order8_coefficients_available();

Schedule make_trotter(const PartitionedHamiltonian& part, int order);
Schedule make_omelyan_small_a(const PartitionedHamiltonian& part);
Schedule make_thrift(const PartitionedHamiltonian& part, int order);

// (step(T/N))^N evaluated densely; per-generator eigendecompositions cached.
DenseUnitary evaluate_schedule(const Schedule& s, double T, int N,
                               int qubit_cap = kDenseQubitCap);

// First-order THRIFT error bound:
//   alpha^2 * int_0^t dv int_0^v ds sum_{g1<g2} ||[H1^g1(s), H1^g2(v)]||
// with H1^g(s) = e^{isH0} H1^g e^{-isH0}, by tensor Gauss-Legendre quadrature.
double thrift_error_bound(const PartitionedHamiltonian& part, double t,
                          int quadrature_points = 32);

// Distance between e^{i t_b H0} e^{-i(t_b-t_a)(H0+A)} e^{-i t_a H0} and an
// N-slice product approximation of the time-ordered exponential of
// A(tau) = e^{i tau H0} A e^{-i tau H0}; decays as O(1/N).
double verify_time_ordered_identity(const PauliSum& h0, const PauliSum& a,
                                    double t_a, double t_b, int N);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Directory holding coefficient/registry data files (env THRIFT_DATA_DIR,
// then ./data, then the build-time source default).
std::string data_dir();

}  // namespace thrift
