#include "thrift/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace thrift {

HermitianExp::HermitianExp(const PauliSum& h, int qubit_cap) {
  if (h.n_qubits() > qubit_cap) throw std::runtime_error("dense qubit cap exceeded");
  if (!h.is_hermitian()) throw std::invalid_argument("non-Hermitian generator");
  Eigen::MatrixXcd m = h.to_dense();
  if (h.is_diagonal()) {
    diagonal_ = true;
    evals_ = m.diagonal().real();
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
}

DenseUnitary HermitianExp::unitary(double t) const {
  const auto dim = evals_.size();
  Eigen::VectorXcd ph(dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    ph(j) = std::exp(cplx(0, -t * evals_(j)));
  if (diagonal_) return ph.asDiagonal();
  return evecs_ * ph.asDiagonal() * evecs_.adjoint();
}

DenseUnitary expm_hermitian(const PauliSum& h, double t, int qubit_cap) {
  return HermitianExp(h, qubit_cap).unitary(t);
}

double spectral_error(const DenseUnitary& u, const DenseUnitary& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("dimension mismatch");
  // largest singular value of the difference; computed directly (not via the
  // 2 - 2 cos theta identity, whose square root amplifies rounding noise)
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(u - v);
  return svd.singularValues()(0);
}

double avg_infidelity(const DenseUnitary& u_exact, const DenseUnitary& v) {
  if (u_exact.rows() != v.rows() || u_exact.cols() != v.cols())
    throw std::invalid_argument("dimension mismatch");
  const auto dim = u_exact.cols();
  double acc = 0;
  for (Eigen::Index x = 0; x < dim; ++x) {
    cplx d = u_exact.col(x).dot(v.col(x));  // conjugates the left factor
    acc += std::norm(d);
  }
  return 1.0 - acc / (double)dim;
}

}  // namespace thrift
