#pragma once
// Free-fermion fast path for the 1D TFIM: quadratic Majorana generators,
// schedule evaluation as 2L x 2L rotations, and the spectral error metric
// recovered from canonical angles.

#include <Eigen/Dense>

#include "thrift/formulas.hpp"
#include "thrift/models.hpp"

namespace thrift {

struct GaussianUnitary {
  int L = 0;
  Eigen::MatrixXd R;       // 2L x 2L, orthogonal, det +1
  int parity_sign = 1;     // two-fold cover bookkeeping
};

// Antisymmetric m with H = (i/4) sum m_{mu nu} gamma_mu gamma_nu; accepts
// Jordan-Wigner quadratic strings only (single Z, or X/Y endpoints joined
// by a full Z string).
Eigen::MatrixXd quadratic_generator(const PauliSum& h, int L);

GaussianUnitary flo_exact(const PartitionedHamiltonian& part, double T);
GaussianUnitary flo_evaluate_schedule(const Schedule& s, const PartitionedHamiltonian& part,
                                      double T, int N);
// Free-fermion realization of the order-1/2 averaged-Hamiltonian evolution.
GaussianUnitary flo_magnus_evolve(const PartitionedHamiltonian& part, double alpha,
                                  double T, int N, int order);

struct FloErrorReport {
  double value = 0;        // residual-sign-minimized worst-case error
  double pessimistic = 0;  // max over the residual cover sign
};

FloErrorReport flo_spectral_error_report(const GaussianUnitary& g_exact,
                                         const GaussianUnitary& g_apx);
double flo_spectral_error(const GaussianUnitary& g_exact, const GaussianUnitary& g_apx);

}  // namespace thrift
