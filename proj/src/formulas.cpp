#include "thrift/formulas.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef THRIFT_DEFAULT_DATA_DIR
#define THRIFT_DEFAULT_DATA_DIR "data"
#endif

namespace thrift {

std::string formula_kind_name(FormulaKind k) {
  switch (k) {
    case FormulaKind::trotter1: return "trotter1";
    case FormulaKind::trotter2: return "trotter2";
    case FormulaKind::trotter4: return "trotter4";
    case FormulaKind::trotter8_opt: return "trotter8_opt";
    case FormulaKind::omelyan_small_a4: return "omelyan_small_a4";
    case FormulaKind::thrift1: return "thrift1";
    case FormulaKind::thrift2: return "thrift2";
    case FormulaKind::thrift4: return "thrift4";
    case FormulaKind::thrift8_opt: return "thrift8_opt";
    case FormulaKind::magnus_thrift1: return "magnus_thrift1";
    case FormulaKind::magnus_thrift2: return "magnus_thrift2";
  }
  throw std::logic_error("unreachable");
}

FormulaKind formula_kind_from_name(const std::string& s) {
  for (FormulaKind k : {FormulaKind::trotter1, FormulaKind::trotter2, FormulaKind::trotter4,
                        FormulaKind::trotter8_opt, FormulaKind::omelyan_small_a4,
                        FormulaKind::thrift1, FormulaKind::thrift2, FormulaKind::thrift4,
                        FormulaKind::thrift8_opt, FormulaKind::magnus_thrift1,
                        FormulaKind::magnus_thrift2})
    if (formula_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown formula kind: " + s);
}

std::string data_dir() {
  if (const char* env = std::getenv("THRIFT_DATA_DIR")) return env;
  if (std::filesystem::exists("data/depth_registry.csv")) return "data";
  return THRIFT_DEFAULT_DATA_DIR;
}

double suzuki_s2() { return 1.0 / (4.0 - std::cbrt(4.0)); }

std::vector<double> load_order8_coefficients() {
  const std::string path = data_dir() + "/trotter8_coefficients.txt";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("eighth-order coefficient table missing: " + path);
  std::vector<double> w;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.resize(pos);
    std::istringstream ss(line);
    double v;
    if (ss >> v) w.push_back(v);
  }
  if (w.size() != 8)
    throw std::runtime_error("expected 8 coefficients (omega_0..omega_7) in " + path);
  return w;
}

bool order8_coefficients_available() {
  try {
    load_order8_coefficients();
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

// Base first-order sequences; both return the shared generator table.
Schedule trotter_base(const PartitionedHamiltonian& part) {
  if (part.h1_groups.empty()) throw std::invalid_argument("need at least one group");
  Schedule s;
  s.generators.push_back({"h0", part.h0});
  for (const auto& [label, g] : part.h1_groups)
    s.generators.push_back({"a*" + label, g.scaled(part.alpha)});
  // S1(t): groups gamma = Gamma..1 left to right, then H0.
  for (int g = (int)part.h1_groups.size(); g >= 1; --g) s.append(g, 1.0);
  s.append(0, 1.0);
  return s;
}

Schedule thrift_base(const PartitionedHamiltonian& part) {
  if (part.h1_groups.empty()) throw std::invalid_argument("need at least one group");
  Schedule s;
  s.generators.push_back({"h0", part.h0});
  for (const auto& [label, g] : part.h1_groups) {
    PauliSum w = part.h0;
    w.add(g, part.alpha);
    s.generators.push_back({"h0+a*" + label, w});
  }
  // e^{-itH0} prod_gamma (e^{+itH0} e^{-it(H0 + a H1^gamma)})
  s.append(0, 1.0);
  for (int g = 1; g <= (int)part.h1_groups.size(); ++g) {
    s.append(0, -1.0);
    s.append(g, 1.0);
  }
  return s;
}

std::vector<std::pair<int, double>> symmetrize(const std::vector<std::pair<int, double>>& s1) {
  std::vector<std::pair<int, double>> s2;
  for (auto [g, m] : s1) s2.emplace_back(g, m * 0.5);
  for (auto it = s1.rbegin(); it != s1.rend(); ++it) s2.emplace_back(it->first, it->second * 0.5);
  return s2;
}

Schedule compose(Schedule base, const std::vector<std::pair<int, double>>& s2, int order) {
  base.steps.clear();
  if (order == 2) {
    base.steps = s2;
  } else if (order == 4) {
    const double s = suzuki_s2();
    for (double c : {s, s, 1.0 - 4.0 * s, s, s}) base.append_scaled(s2, c);
  } else if (order == 8) {
    std::vector<double> w = load_order8_coefficients();  // omega_0..omega_7
    for (int j = 7; j >= 1; --j) base.append_scaled(s2, w[j]);
    base.append_scaled(s2, w[0]);
    for (int j = 1; j <= 7; ++j) base.append_scaled(s2, w[j]);
  } else {
    throw std::invalid_argument("unsupported order");
  }
  return base;
}

}  // namespace

Schedule make_trotter(const PartitionedHamiltonian& part, int order) {
  Schedule s1 = trotter_base(part);
  if (order == 1) return s1;
  return compose(s1, symmetrize(s1.steps), order);
}

Schedule make_thrift(const PartitionedHamiltonian& part, int order) {
  Schedule s1 = thrift_base(part);
  if (order == 1) return s1;
  // U_apx(t/2) * reverse(U_apx(t/2)); the reversed half realizes the
  // adjoint-at-negative-time factor of the symmetric composition.
  return compose(s1, symmetrize(s1.steps), order);
}

Schedule make_omelyan_small_a(const PartitionedHamiltonian& part) {
  if (part.h1_groups.empty()) throw std::invalid_argument("need at least one group");
  Schedule s;
  s.generators.push_back({"h0", part.h0});
  for (const auto& [label, g] : part.h1_groups)
    s.generators.push_back({"a*" + label, g.scaled(part.alpha)});
  const int nterms = (int)s.generators.size();  // h_1 = H0 first
  const double a[4] = {kOmelyanA1, kOmelyanA2, kOmelyanA3, kOmelyanA2};
  const double b[4] = {kOmelyanB1, kOmelyanB2, kOmelyanB2, kOmelyanB1};
  double d_prev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double c = a[i] - d_prev;
    const double d = b[i] - c;
    for (int j = 0; j < nterms; ++j) s.append(j, c);
    for (int j = nterms - 1; j >= 0; --j) s.append(j, d);
    d_prev = d;
  }
  return s;
}

DenseUnitary evaluate_schedule(const Schedule& s, double T, int N, int qubit_cap) {
  const double dt = T / N;
  std::vector<HermitianExp> cache(s.generators.size());
  std::vector<bool> built(s.generators.size(), false);
  const int n = s.generators.empty() ? 0 : s.generators[0].h.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  DenseUnitary step = DenseUnitary::Identity(dim, dim);
  for (auto [g, m] : s.steps) {
    if (!built[g]) {
      cache[g] = HermitianExp(s.generators[g].h, qubit_cap);
      built[g] = true;
    }
    step = step * cache[g].unitary(m * dt);
  }
  // step^N by binary exponentiation
  DenseUnitary result = DenseUnitary::Identity(dim, dim);
  unsigned k = (unsigned)N;
  while (k) {
    if (k & 1u) result = result * step;
    k >>= 1;
    if (k) step = step * step;
  }
  return result;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));  // Chebyshev initial guess
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

namespace {

double anti_hermitian_norm(const Eigen::MatrixXcd& c) {
  Eigen::MatrixXcd ic = cplx(0, 1) * c;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ic, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace

double thrift_error_bound(const PartitionedHamiltonian& part, double t, int quadrature_points) {
  const int G = (int)part.h1_groups.size();
  if (G < 2) return 0.0;
  HermitianExp h0exp(part.h0);
  std::vector<Eigen::MatrixXcd> groups;
  for (const auto& [label, g] : part.h1_groups) groups.push_back(g.to_dense());
  auto frame = [&](const Eigen::MatrixXcd& g, double s) {
    DenseUnitary e = h0exp.unitary(-s);  // e^{isH0}
    return (e * g * e.adjoint()).eval();
  };
  std::vector<double> x, w;
  gauss_legendre(quadrature_points, x, w);
  double total = 0;
  for (int i = 0; i < quadrature_points; ++i) {
    const double v = 0.5 * t * (x[i] + 1.0), wv = 0.5 * t * w[i];
    std::vector<Eigen::MatrixXcd> at_v;
    for (int g = 0; g < G; ++g) at_v.push_back(frame(groups[g], v));
    for (int j = 0; j < quadrature_points; ++j) {
      const double sN = 0.5 * v * (x[j] + 1.0), ws = 0.5 * v * w[j];
      double f = 0;
      for (int g1 = 0; g1 < G; ++g1) {
        Eigen::MatrixXcd a = frame(groups[g1], sN);
        for (int g2 = g1 + 1; g2 < G; ++g2)
          f += anti_hermitian_norm(a * at_v[g2] - at_v[g2] * a);
      }
      total += wv * ws * f;
    }
  }
  return part.alpha * part.alpha * total;
}

double verify_time_ordered_identity(const PauliSum& h0, const PauliSum& a,
                                    double t_a, double t_b, int N) {
  HermitianExp h0exp(h0);
  Eigen::MatrixXcd ad = a.to_dense();
  PauliSum hpa = h0 + a;
  DenseUnitary lhs = h0exp.unitary(-t_b) *  // e^{+i t_b H0}
                     expm_hermitian(hpa, t_b - t_a) * h0exp.unitary(t_a);
  const double dtau = (t_b - t_a) / N;
  const auto dim = ad.rows();
  DenseUnitary rhs = DenseUnitary::Identity(dim, dim);
  for (int k = 1; k <= N; ++k) {  // latest slice leftmost
    const double tau = t_a + (k - 1) * dtau;  // left endpoint: O(1/N) error
    DenseUnitary e = h0exp.unitary(-tau);
    Eigen::MatrixXcd a_tau = e * ad * e.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a_tau);
    Eigen::VectorXcd ph(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
      ph(j) = std::exp(cplx(0, -dtau * es.eigenvalues()(j)));
    rhs = (es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint()) * rhs;
  }
  return spectral_error(lhs, rhs);
}

}  // namespace thrift
