#pragma once
// Interaction-picture decomposition with exactly integrable trigonometric
// coefficients, order-1/2 averaged-Hamiltonian evolution built from it,
// and the convergence-series machinery for the remainder bound.

#include <string>
#include <vector>

#include "thrift/exact.hpp"
#include "thrift/models.hpp"
#include "thrift/trigpoly.hpp"

namespace thrift {

// H1(t) = e^{itH0} H1 e^{-itH0} = sum_q alpha_q(t) O_q (alpha factor excluded).
struct InteractionHamiltonian {
  int n_qubits = 0;
  std::vector<std::pair<PauliString, TrigPoly>> entries;
  PauliSum h0;
};

// Requires diagonal (Z-type) H0; true for all bundled models.
InteractionHamiltonian interaction_picture(const PartitionedHamiltonian& part);

// Omega^{[order]}(t0, dt) = -i * alpha * dt * effective_hamiltonian.
struct MagnusTerm {
  int order = 1;
  double t0 = 0, dt = 0;
  PauliSum a_part;  // sum_q A_q O_q
  PauliSum b_part;  // sum_{q>p} B_qp [O_q, O_p] (order 2 only)
  PauliSum effective_hamiltonian;
  std::vector<cplx> A;                              // audit: per-entry A_q
  std::vector<std::pair<std::pair<int, int>, cplx>> B;  // audit: ((q,p), B_qp)
};

MagnusTerm magnus_term(const InteractionHamiltonian& ih, double alpha, double t0,
                       double dt, int order);

// e^{-iTH0} * prod_{k=N..1} S(t0 = (k-1)T/N), slice k=1 rightmost.
// split_order 2 symmetrizes the A/B split within each order-2 slice.
DenseUnitary magnus_thrift_evolve(const PartitionedHamiltonian& part, double alpha,
                                  double T, int N, int order, int split_order = 2,
                                  int qubit_cap = kDenseQubitCap);

struct ConvergenceSeries {
  std::vector<double> x;          // x_1..x_lmax, coefficients of G^{-1}
  std::vector<double> bernoulli;  // b_0..b_lmax as doubles (exact-rational source)
  double threshold = 0;           // G(2*pi)/2
};

ConvergenceSeries convergence_series(int l_max);

struct MagnusRemainder {
  double value = 0;
  int l_max = 0;
  std::string note;  // truncation-tail disclaimer
};

// sum_{l=k+1..l_max} x_l/2 * (2 alpha * int ||H1||)^l; requires the argument
// inside the convergence region.
MagnusRemainder magnus_remainder_bound(int k, double alpha, double t,
                                       double h1_norm_integral,
                                       const ConvergenceSeries& series);

}  // namespace thrift
