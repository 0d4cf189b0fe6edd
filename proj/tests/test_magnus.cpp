#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "thrift/exact.hpp"
#include "thrift/formulas.hpp"
#include "thrift/magnus.hpp"
#include "thrift/models.hpp"

using namespace thrift;

namespace {

// Manual partition: H0 plus one perturbation group, enough for
// interaction_picture / magnus_term (which never touch the rest).
PartitionedHamiltonian manual_part(const PauliSum& h0, const PauliSum& g, double alpha) {
  PartitionedHamiltonian part;
  part.n_qubits = h0.n_qubits();
  part.h0 = h0;
  part.alpha = alpha;
  part.h1_groups = {{"g", g}};
  part.full = h0;
  part.full.add(g, alpha);
  return part;
}

Eigen::MatrixXcd h1_dense_at(const InteractionHamiltonian& ih, double t) {
  const std::size_t dim = std::size_t{1} << ih.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [op, tp] : ih.entries) m += tp.evaluate(t) * oracle::dense_string(op);
  return m;
}

Eigen::MatrixXcd conjugated_h1(const PartitionedHamiltonian& part, double t) {
  PauliSum h1(part.n_qubits);
  for (const auto& [label, g] : part.h1_groups) h1.add(g);
  DenseUnitary u = expm_hermitian(part.h0, -t);  // e^{+itH0}
  return u * oracle::dense_sum(h1) * u.adjoint();
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = (double)x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("single-qubit interaction picture: cos(2ht) X - sin(2ht) Y") {
  const double h = 0.8;
  PauliSum h0(1), g(1);
  h0.add(PauliString(1, "Z"), h);
  g.add(PauliString(1, "X"), 1.0);
  auto part = manual_part(h0, g, 0.3);
  InteractionHamiltonian ih = interaction_picture(part);
  REQUIRE(ih.entries.size() == 2);

  for (const auto& [op, tp] : ih.entries) {
    if (op == PauliString(1, "X")) {
      for (double t : {0.0, 0.3, 1.7})
        CHECK(std::abs(tp.evaluate(t) - std::cos(2 * h * t)) < 1e-12);
    } else {
      REQUIRE(op == PauliString(1, "Y"));
      for (double t : {0.0, 0.3, 1.7})
        CHECK(std::abs(tp.evaluate(t) + std::sin(2 * h * t)) < 1e-12);
    }
  }
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> time(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    double t = time(rng);
    CHECK((h1_dense_at(ih, t) - conjugated_h1(part, t)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("terms commuting with h0 get constant coefficients") {
  PauliSum h0(2), g(2);
  h0.add(PauliString(2, "ZI"), 0.9);
  h0.add(PauliString(2, "IZ"), 1.1);
  g.add(PauliString(2, "ZZ"), 0.7);
  InteractionHamiltonian ih = interaction_picture(manual_part(h0, g, 0.2));
  REQUIRE(ih.entries.size() == 1);
  REQUIRE(ih.entries[0].second.terms().size() == 1);
  CHECK(ih.entries[0].second.terms()[0].first == 0.0);
  CHECK(std::abs(ih.entries[0].second.evaluate(1.23) - cplx_t(0.7)) < 1e-14);
}

TEST_CASE("tfim interaction picture contains only two-site XX/YY/XY/YX words") {
  auto part = build_model({ModelKind::tfim_1d, 4, 0, 1.0, 0.25});
  InteractionHamiltonian ih = interaction_picture(part);
  CHECK(!ih.entries.empty());
  for (const auto& [op, tp] : ih.entries) {
    CHECK(op.weight() == 2);
    CHECK(op.x == op.support());  // every site carries X or Y, never bare Z
    CHECK(tp.is_real());
  }
}

TEST_CASE("dense reconstruction for every bundled model") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> time(-1.5, 1.5);
  for (auto spec : {ModelSpec{ModelKind::tfim_1d, 4, 0, 1.0, 0.3},
                    ModelSpec{ModelKind::tfim_2d, 2, 2, 1.0, 0.4},
                    ModelSpec{ModelKind::heisenberg_1d, 4, 0, 1.0, 0.7, 0, 1.0, 9},
                    ModelSpec{ModelKind::fermi_hubbard_1d, 2, 0, 0, 0, 0.8, 1.1}}) {
    auto part = build_model(spec);
    InteractionHamiltonian ih = interaction_picture(part);
    for (int trial = 0; trial < 20; ++trial) {
      double t = time(rng);
      CHECK((h1_dense_at(ih, t) - conjugated_h1(part, t)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("constant coefficients make the second-order correction vanish") {
  InteractionHamiltonian ih;
  ih.n_qubits = 1;
  ih.h0 = PauliSum(1);
  ih.entries.emplace_back(PauliString(1, "X"), TrigPoly::constant(0.7));
  ih.entries.emplace_back(PauliString(1, "Y"), TrigPoly::constant(-0.4));
  MagnusTerm mt = magnus_term(ih, 0.3, 0.2, 0.9, 2);
  CHECK(mt.b_part.one_norm() < 1e-12);
  for (const auto& [qp, b] : mt.B) CHECK(std::abs(b) < 1e-12);
}

TEST_CASE("audit B matches a sign-kernel quadrature for random coefficient pairs") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> freq(-3.0, 3.0), amp(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    TrigPoly f, gpoly;
    for (int k = 0; k < 3; ++k) {
      f.add_term(freq(rng), cplx_t(amp(rng), amp(rng)));
      gpoly.add_term(freq(rng), cplx_t(amp(rng), amp(rng)));
    }
    InteractionHamiltonian ih;
    ih.n_qubits = 1;
    ih.h0 = PauliSum(1);
    ih.entries.emplace_back(PauliString(1, "X"), gpoly);  // p = 0
    ih.entries.emplace_back(PauliString(1, "Y"), f);      // q = 1
    const double alpha = 0.37, t0 = 0.15, dt = 0.8;
    MagnusTerm mt = magnus_term(ih, alpha, t0, dt, 2);
    REQUIRE(mt.B.size() == 1);

    // midpoint double quadrature of int int f(t1) g(t2) sign(t1 - t2)
    const int n = 600;
    const double h = dt / n;
    cplx_t acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double t1 = t0 + (i + 0.5) * h, t2 = t0 + (j + 0.5) * h;
        double sgn = t1 > t2 ? 1.0 : (t1 < t2 ? -1.0 : 0.0);
        acc += f.evaluate(t1) * gpoly.evaluate(t2) * sgn * h * h;
      }
    cplx_t expected = -cplx_t(0, 1) * alpha / (2.0 * dt) * acc;
    CHECK(std::abs(mt.B[0].second - expected) < 1e-5);  // midpoint-rule accuracy
  }
}

TEST_CASE("order-1 generator matches the averaged interaction Hamiltonian") {
  auto part = build_model({ModelKind::tfim_1d, 4, 0, 1.0, 0.25});
  InteractionHamiltonian ih = interaction_picture(part);
  const double t0 = 0.1, dt = 0.6;
  MagnusTerm mt = magnus_term(ih, part.alpha, t0, dt, 1);
  CHECK(mt.effective_hamiltonian.is_hermitian(1e-10));

  const int n = 10000;
  const double h = dt / n;
  Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(16, 16);
  for (int i = 0; i < n; ++i) avg += h1_dense_at(ih, t0 + (i + 0.5) * h) * (h / dt);
  CHECK((oracle::dense_sum(mt.a_part) - avg).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("order-2 generator matches the canonical double-integral expansion") {
  auto part = build_model({ModelKind::tfim_1d, 4, 0, 1.0, 0.25});
  const double alpha = part.alpha;
  InteractionHamiltonian ih = interaction_picture(part);
  const double t0 = 0.2, dt = 0.5;
  MagnusTerm mt = magnus_term(ih, alpha, t0, dt, 2);
  CHECK(mt.effective_hamiltonian.is_hermitian(1e-10));
  Eigen::MatrixXcd omega =
      cplx(0, -1) * alpha * dt * oracle::dense_sum(mt.effective_hamiltonian);
  CHECK((omega + omega.adjoint().eval()).cwiseAbs().maxCoeff() < 1e-10);

  // Oracle: -i alpha int H1(t1) dt1 - (alpha^2/2) int dt1 int_{t0}^{t1} dt2
  // [H1(t1), H1(t2)], double integral via a running inner midpoint sum.
  const int n = 2000;
  const double h = dt / n;
  Eigen::MatrixXcd first = Eigen::MatrixXcd::Zero(16, 16),
                   second = Eigen::MatrixXcd::Zero(16, 16),
                   inner = Eigen::MatrixXcd::Zero(16, 16);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd h1 = h1_dense_at(ih, t0 + (i + 0.5) * h);
    first += h1 * h;
    // inner holds int_{t0}^{t1-h/2} H1; extend to the midpoint by half a panel
    Eigen::MatrixXcd k = inner + 0.5 * h * h1;
    second += (h1 * k - k * h1) * h;
    inner += h1 * h;
  }
  Eigen::MatrixXcd oracle_omega =
      cplx(0, -1) * alpha * first - 0.5 * alpha * alpha * second;
  CHECK((omega - oracle_omega).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("alpha = 0 evolves by h0 alone") {
  auto part = build_model({ModelKind::tfim_1d, 3, 0, 1.0, 0.2});
  for (int order : {1, 2}) {
    DenseUnitary u = magnus_thrift_evolve(part, 0.0, 0.9, 3, order);
    CHECK(spectral_error(expm_hermitian(part.h0, 0.9), u) < 1e-12);
  }
}

TEST_CASE("slices chain across an interval split") {
  auto part = build_model({ModelKind::tfim_1d, 3, 0, 1.0, 0.3});
  InteractionHamiltonian ih = interaction_picture(part);
  const double alpha = part.alpha, T = 0.8;
  const int N = 2, order = 2;

  auto chunk = [&](double a, double b, int slices) {
    const double dt = (b - a) / slices;
    DenseUnitary u = DenseUnitary::Identity(8, 8);
    for (int k = slices; k >= 1; --k) {
      MagnusTerm mt = magnus_term(ih, alpha, a + (k - 1) * dt, dt, order);
      DenseUnitary half = expm_hermitian(mt.a_part, alpha * dt / 2.0);
      u = u * (half * expm_hermitian(mt.b_part, alpha * dt) * half);
    }
    return u;
  };

  DenseUnitary whole = magnus_thrift_evolve(part, alpha, T, 2 * N, order);
  DenseUnitary glued =
      expm_hermitian(part.h0, T) * chunk(T / 2, T, N) * chunk(0.0, T / 2, N);
  CHECK((whole - glued).cwiseAbs().maxCoeff() < 1e-12);

  DenseUnitary tail = expm_hermitian(part.h0, T) * chunk(T / 2, T, N) *
                      expm_hermitian(part.h0, -T / 2);
  DenseUnitary head = magnus_thrift_evolve(part, alpha, T / 2, N, order);
  CHECK((whole - tail * head).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("alpha scaling: slope 2 at order 1, slope 3 at order 2") {
  const double T = 1.0;
  const int N = 4;
  std::vector<double> la, l1, l2;
  for (double alpha : {1e-3, 3.16e-3, 1e-2, 3.16e-2, 1e-1}) {
    auto part = build_model({ModelKind::tfim_1d, 4, 0, 1.0, alpha});
    DenseUnitary exact = expm_hermitian(part.full, T);
    la.push_back(std::log(alpha));
    l1.push_back(std::log(spectral_error(exact, magnus_thrift_evolve(part, alpha, T, N, 1))));
    l2.push_back(std::log(spectral_error(exact, magnus_thrift_evolve(part, alpha, T, N, 2))));
  }
  CHECK(slope(la, l1) == doctest::Approx(2.0).epsilon(0.1));
  CHECK(slope(la, l2) == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("convergence series anchors") {
  ConvergenceSeries s = convergence_series(10);
  REQUIRE(s.x.size() == 10);
  CHECK(s.x[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (double xl : s.x) CHECK(xl > 0.0);
  CHECK(s.threshold == doctest::Approx(1.08687).epsilon(1e-4));
  CHECK(s.bernoulli[0] == 1.0);
  CHECK(s.bernoulli[1] == doctest::Approx(-0.5));
  CHECK(s.bernoulli[2] == doctest::Approx(1.0 / 6.0));
  CHECK(s.bernoulli[3] == 0.0);
  CHECK_THROWS_AS(convergence_series(25), std::invalid_argument);
}

TEST_CASE("remainder bound: trivial zeros, domain guard, dominance") {
  ConvergenceSeries s = convergence_series(10);
  CHECK(magnus_remainder_bound(1, 0.0, 0.5, 3.0, s).value == 0.0);
  CHECK(magnus_remainder_bound(10, 0.1, 0.5, 1.0, s).value == 0.0);  // all terms cut
  CHECK_THROWS_AS(magnus_remainder_bound(1, 1.0, 1.0, 10.0, s), std::domain_error);

  const double alpha = 0.05, t = 0.5;
  auto part = build_model({ModelKind::tfim_1d, 4, 0, 1.0, alpha});
  PauliSum h1(part.n_qubits);
  for (const auto& [label, g] : part.h1_groups) h1.add(g);
  // conjugation by e^{itH0} preserves the spectral norm, so the integral
  // of ||H1(s)|| collapses to t * ||H1||
  double integral = t * spectral_norm_dense(h1);
  double bound = magnus_remainder_bound(1, alpha, t, integral, s).value;
  double measured = spectral_error(expm_hermitian(part.full, t),
                                   magnus_thrift_evolve(part, alpha, t, 1, 1));
  CHECK(bound > 0.0);
  CHECK(measured <= bound);
}
