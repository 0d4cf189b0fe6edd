#pragma once
// Dense exact-evolution oracle and the two error metrics.

#include <string>

#include <Eigen/Dense>

#include "thrift/pauli.hpp"

namespace thrift {

inline constexpr int kDenseQubitCap = 12;

using DenseUnitary = Eigen::MatrixXcd;

struct ErrorReport {
  std::string metric;  // "worst_case" or "avg_infidelity"
  double value = 0;
  int n_qubits = 0;
  double wall_time = 0;
};

// Cached eigendecomposition of a Hermitian operator; cheap U(t) for many t.
class HermitianExp {
 public:
  HermitianExp() = default;
  explicit HermitianExp(const PauliSum& h, int qubit_cap = kDenseQubitCap);
  // exp(-i t H)
  DenseUnitary unitary(double t) const;

 private:
  bool diagonal_ = false;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;  // unused when diagonal_
};

DenseUnitary expm_hermitian(const PauliSum& h, double t, int qubit_cap = kDenseQubitCap);

// ||u - v|| = max_j |1 - lambda_j| over eigenvalues of u^dag v.
double spectral_error(const DenseUnitary& u, const DenseUnitary& v);

// 1 - mean_x |(u_exact^dag v)_{xx}|^2 over all computational basis states.
double avg_infidelity(const DenseUnitary& u_exact, const DenseUnitary& v);

}  // namespace thrift
