#include "thrift/flo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thrift/magnus.hpp"

namespace thrift {

namespace {

// Majorana operator as a Pauli string: c_{2j} = Z_0..Z_{j-1} X_j,
// c_{2j+1} = Z_0..Z_{j-1} Y_j.
PauliString majorana(int n, int mu) {
  const int j = mu / 2;
  PauliString p(n);
  for (int k = 0; k < j; ++k) p.z.set(k);
  p.x.set(j);
  if (mu & 1) p.z.set(j);
  return p;
}

Eigen::MatrixXd expm_antisym(const Eigen::MatrixXd& m, double theta) {
  // i*m is Hermitian; exp(theta m) = V e^{-i theta Lambda} V^dag (real result)
  Eigen::MatrixXcd a = cplx(0, 1) * m.cast<cplx>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  Eigen::VectorXcd ph(m.rows());
  for (Eigen::Index k = 0; k < m.rows(); ++k)
    ph(k) = std::exp(cplx(0, -theta * es.eigenvalues()(k)));
  Eigen::MatrixXcd r = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  return r.real();
}

// Cached eigendecomposition of i*m for repeated exp(theta m).
struct RotationCache {
  Eigen::VectorXd evals;
  Eigen::MatrixXcd evecs;
  explicit RotationCache(const Eigen::MatrixXd& m) {
    Eigen::MatrixXcd a = cplx(0, 1) * m.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    evals = es.eigenvalues();
    evecs = es.eigenvectors();
  }
  Eigen::MatrixXd rot(double theta) const {
    Eigen::VectorXcd ph(evals.size());
    for (Eigen::Index k = 0; k < evals.size(); ++k)
      ph(k) = std::exp(cplx(0, -theta * evals(k)));
    return (evecs * ph.asDiagonal() * evecs.adjoint()).real();
  }
};

}  // namespace

Eigen::MatrixXd quadratic_generator(const PauliSum& h, int L) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * L, 2 * L);
  const int n = h.n_qubits();
  for (const auto& [p, c] : h.terms()) {
    if (p.is_identity()) throw std::invalid_argument("identity term is not quadratic");
    int a = -1, b = -1;
    for (int q = 0; q < n; ++q)
      if (p.x.get(q) || p.z.get(q)) {
        if (a < 0) a = q;
        b = q;
      }
    // shape check: X/Y at both endpoints with a full Z string between,
    // or a single pure-Z site
    if (a == b) {
      if (p.x.get(a)) throw std::invalid_argument("non-quadratic term: " + p.label());
    } else {
      if (!p.x.get(a) || !p.x.get(b))
        throw std::invalid_argument("non-quadratic term: " + p.label());
      for (int q = a + 1; q < b; ++q)
        if (p.x.get(q) || !p.z.get(q))
          throw std::invalid_argument("non-quadratic term: " + p.label());
    }
    // locate (mu, nu) with c_mu c_nu proportional to the term; phase exact
    bool found = false;
    for (int mu : a == b ? std::vector<int>{2 * a} : std::vector<int>{2 * a, 2 * a + 1}) {
      for (int nu : a == b ? std::vector<int>{2 * a + 1} : std::vector<int>{2 * b, 2 * b + 1}) {
        PauliProduct pr = pauli_mul(majorana(n, mu), majorana(n, nu));
        if (!(pr.string == p)) continue;
        // c_mu c_nu = i^k P  =>  P = i^{-k} c_mu c_nu, so the term
        // w P = (i/2) m_{mu nu} c_mu c_nu requires m_{mu nu} = -2 i w i^{-k}
        cplx mv = cplx(0, -2.0) * c * std::conj(pr.phase());
        if (std::abs(mv.imag()) > 1e-10)
          throw std::invalid_argument("non-Hermitian quadratic term");
        m(mu, nu) += mv.real();
        m(nu, mu) -= mv.real();
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) throw std::invalid_argument("non-quadratic term: " + p.label());
  }
  return m;
}

GaussianUnitary flo_exact(const PartitionedHamiltonian& part, double T) {
  const int L = part.n_qubits;
  GaussianUnitary g;
  g.L = L;
  g.R = expm_antisym(quadratic_generator(part.full, L), -T);
  return g;
}

GaussianUnitary flo_evaluate_schedule(const Schedule& s, const PartitionedHamiltonian& part,
                                      double T, int N) {
  const int L = part.n_qubits;
  const double dt = T / N;
  std::vector<RotationCache> cache;
  cache.reserve(s.generators.size());
  for (const auto& g : s.generators)
    cache.emplace_back(quadratic_generator(g.h, L));
  Eigen::MatrixXd step = Eigen::MatrixXd::Identity(2 * L, 2 * L);
  // factor e^{-i theta H} acts on the Majorana frame as exp(-theta m);
  // walking the schedule left to right composes by left multiplication
  for (auto [g, mult] : s.steps) step = cache[g].rot(-mult * dt) * step;
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(2 * L, 2 * L);
  unsigned k = (unsigned)N;
  while (k) {
    if (k & 1u) r = r * step;
    k >>= 1;
    if (k) step = step * step;
  }
  GaussianUnitary out;
  out.L = L;
  out.R = r;
  return out;
}

GaussianUnitary flo_magnus_evolve(const PartitionedHamiltonian& part, double alpha,
                                  double T, int N, int order) {
  const int L = part.n_qubits;
  InteractionHamiltonian ih = interaction_picture(part);
  const double dt = T / N;
  // Frame map is an anti-homomorphism: walking the operator product left to
  // right, each factor's rotation left-multiplies the accumulator.
  Eigen::MatrixXd r =
      expm_antisym(quadratic_generator(part.h0, L), -T);  // e^{-iTH0}, leftmost
  for (int k = N; k >= 1; --k) {  // k = N is the leftmost slice, k = 1 rightmost
    MagnusTerm mt = magnus_term(ih, alpha, (k - 1) * dt, dt, order);
    Eigen::MatrixXd ma = quadratic_generator(mt.a_part, L);
    Eigen::MatrixXd slice;
    if (order == 1) {
      slice = expm_antisym(ma, -alpha * dt);
    } else {
      Eigen::MatrixXd half = expm_antisym(ma, -alpha * dt / 2.0);
      Eigen::MatrixXd mb = mt.b_part.size()
                               ? expm_antisym(quadratic_generator(mt.b_part, L), -alpha * dt)
                               : Eigen::MatrixXd::Identity(2 * L, 2 * L);
      slice = half * mb * half;
    }
    r = slice * r;
  }
  GaussianUnitary out;
  out.L = L;
  out.R = r;
  return out;
}

FloErrorReport flo_spectral_error_report(const GaussianUnitary& g_exact,
                                         const GaussianUnitary& g_apx) {
  if (g_exact.L != g_apx.L) throw std::invalid_argument("dimension mismatch");
  const int L = g_exact.L;
  Eigen::MatrixXd w = g_exact.R.transpose() * g_apx.R;
  // eigenvalues e^{+-i theta_k}; the phase angle is read off directly (an
  // acos of the symmetrized spectrum would lose half the digits near 0)
  Eigen::EigenSolver<Eigen::MatrixXd> es(w, /*computeEigenvectors=*/false);
  std::vector<double> args(2 * L);
  for (int k = 0; k < 2 * L; ++k) args[k] = std::abs(std::arg(es.eigenvalues()(k)));
  std::sort(args.begin(), args.end());
  std::vector<double> theta(L);
  for (int k = 0; k < L; ++k) theta[k] = args[2 * k];  // each pair counted once
  double err_plus, err_minus;
  if (L <= 12) {
    // exact extremization over the 2^L many-body phase combinations
    err_plus = 0;
    err_minus = 0;
    for (unsigned sigma = 0; sigma < (1u << L); ++sigma) {
      double phi = 0;
      for (int k = 0; k < L; ++k) phi += (sigma >> k) & 1 ? theta[k] : -theta[k];
      phi *= 0.5;
      err_plus = std::max(err_plus, 2.0 * std::abs(std::sin(phi / 2.0)));
      err_minus = std::max(err_minus, 2.0 * std::abs(std::cos(phi / 2.0)));
    }
  } else {
    // distance to +U peaks at the largest achievable phase, clamped to pi
    double Theta = 0;
    for (double t : theta) Theta += t;
    Theta = std::min(0.5 * Theta, M_PI);
    err_plus = 2.0 * std::sin(Theta / 2.0);
    // distance to -U peaks at the smallest achievable |sum of +-theta_k/2|;
    // greedy balancing (largest first, sign toward zero) bounds it by
    // max theta_k / 2, which is tight enough for the min/max split
    std::vector<double> desc(theta.rbegin(), theta.rend());
    double bal = 0;
    for (double t : desc) bal += bal > 0 ? -t : t;
    err_minus = 2.0 * std::cos(std::min(std::abs(bal) * 0.25, M_PI / 2.0));
  }
  FloErrorReport rep;
  rep.value = std::min(err_plus, err_minus);
  rep.pessimistic = std::max(err_plus, err_minus);
  return rep;
}

double flo_spectral_error(const GaussianUnitary& g_exact, const GaussianUnitary& g_apx) {
  return flo_spectral_error_report(g_exact, g_apx).value;
}

}  // namespace thrift
