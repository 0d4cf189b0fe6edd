#include "thrift/magnus.hpp"

#include "thrift/formulas.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace thrift {

InteractionHamiltonian interaction_picture(const PartitionedHamiltonian& part) {
  if (!part.h0.is_diagonal())
    throw std::invalid_argument("interaction picture requires diagonal (Z-type) H0");
  const int n = part.n_qubits;
  InteractionHamiltonian out;
  out.n_qubits = n;
  out.h0 = part.h0;

  // H0 terms as (mask, coefficient), identity excluded (commutes with all).
  std::vector<std::pair<PauliString, double>> h0_terms;
  for (const auto& [p, c] : part.h0.terms())
    if (!p.is_identity()) h0_terms.emplace_back(p, c.real());

  PauliSum h1(n);
  for (const auto& [label, g] : part.h1_groups) h1.add(g);

  std::map<PauliString, TrigPoly> merged;
  for (const auto& [p, w] : h1.terms()) {
    // H0 terms anticommuting with p (odd overlap of their Z mask with p's X mask)
    std::vector<int> anti;
    for (int k = 0; k < (int)h0_terms.size(); ++k)
      if ((h0_terms[k].first.z & p.x).popcount() & 1) anti.push_back(k);
    const int m = (int)anti.size();
    // e^{i t c Z_S} conjugation contributes cos(2ct) + i sin(2ct) Z_S per
    // anticommuting H0 term; expand the product over all subsets.
    for (unsigned sub = 0; sub < (1u << m); ++sub) {
      PauliString op = p;
      cplx phase = w;
      TrigPoly coeff = TrigPoly::constant(1.0);
      for (int j = 0; j < m; ++j) {
        const auto& [zs, ck] = h0_terms[anti[j]];
        if (sub & (1u << j)) {
          PauliProduct pr = pauli_mul(zs, op);
          op = pr.string;
          phase *= pr.phase();
          coeff = coeff * (TrigPoly::sine(2.0 * ck) * cplx_t(0, 1));
        } else {
          coeff = coeff * TrigPoly::cosine(2.0 * ck);
        }
      }
      merged[op] = merged[op] + coeff * phase;
    }
  }
  for (auto& [op, tp] : merged)
    if (!tp.empty()) out.entries.emplace_back(op, tp);
  return out;
}

MagnusTerm magnus_term(const InteractionHamiltonian& ih, double alpha, double t0,
                       double dt, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("unsupported order");
  MagnusTerm out;
  out.order = order;
  out.t0 = t0;
  out.dt = dt;
  out.a_part = PauliSum(ih.n_qubits);
  out.b_part = PauliSum(ih.n_qubits);

  const int Q = (int)ih.entries.size();
  for (int q = 0; q < Q; ++q) {
    cplx A = ih.entries[q].second.integrate(t0, t0 + dt) / dt;
    out.A.push_back(A);
    out.a_part.add(ih.entries[q].first, A);
  }
  if (order == 2) {
    std::vector<LinTrigPoly> G(Q);
    for (int p = 0; p < Q; ++p) G[p] = antiderivative(ih.entries[p].second);
    for (int q = 0; q < Q; ++q)
      for (int p = 0; p < q; ++p) {
        const auto& Oq = ih.entries[q].first;
        const auto& Op = ih.entries[p].first;
        if (Oq.commutes_with(Op)) continue;
        // inner sign integral: int a_p(t2) sign(t1-t2) dt2 = 2G_p(t1) - G_p(a) - G_p(b)
        const double a = t0, b = t0 + dt;
        cplx edge = G[p].evaluate(a) + G[p].evaluate(b);
        cplx integral = 2.0 * G[p].times(ih.entries[q].second).integrate(a, b) -
                        edge * ih.entries[q].second.integrate(a, b);
        // prefactor -i alpha / (2 dt): the value consistent with
        // Omega2 = -(1/2) * int int [H1(t1), H1(t2)] (alpha absorbed);
        // required for the third-order alpha scaling of the split formula
        cplx Bqp = -cplx(0, 1) * alpha / (2.0 * dt) * integral;
        out.B.push_back({{q, p}, Bqp});
        PauliProduct pr = pauli_mul(Oq, Op);
        out.b_part.add(pr.string, Bqp * 2.0 * pr.phase());  // [Oq,Op] = 2 phase prod
      }
  }
  out.effective_hamiltonian = out.a_part + out.b_part;
  return out;
}

DenseUnitary magnus_thrift_evolve(const PartitionedHamiltonian& part, double alpha,
                                  double T, int N, int order, int split_order,
                                  int qubit_cap) {
  InteractionHamiltonian ih = interaction_picture(part);
  const double dt = T / N;
  const std::size_t dim = std::size_t{1} << part.n_qubits;
  DenseUnitary u = HermitianExp(part.h0, qubit_cap).unitary(T);  // e^{-iTH0}
  for (int k = N; k >= 1; --k) {  // k = 1 rightmost
    MagnusTerm mt = magnus_term(ih, alpha, (k - 1) * dt, dt, order);
    DenseUnitary slice;
    if (order == 1) {
      slice = expm_hermitian(mt.a_part, alpha * dt, qubit_cap);
    } else if (split_order == 1) {
      slice = expm_hermitian(mt.a_part, alpha * dt, qubit_cap) *
              expm_hermitian(mt.b_part, alpha * dt, qubit_cap);
    } else {
      DenseUnitary half = expm_hermitian(mt.a_part, alpha * dt / 2.0, qubit_cap);
      slice = half * expm_hermitian(mt.b_part, alpha * dt, qubit_cap) * half;
    }
    u = u * slice;
  }
  (void)dim;
  return u;
}

namespace {
// Bernoulli numbers B_0..B_20 as exact rationals.
const long long kBernNum[21] = {1, -1, 1, 0, -1, 0, 1,  0, -1, 0, 5,
                                0, -691, 0, 7, 0, -3617, 0, 43867, 0, -174611};
const long long kBernDen[21] = {1, 2, 6, 1, 30, 1, 42, 1, 30, 1, 66,
                                1, 2730, 1, 6, 1, 510, 1, 798, 1, 330};

// g(z) = sum_j |B_j|/j! z^j = 2 + (z/2)(1 - cot(z/2)) on (0, 2*pi)
double g_closed(double z) {
  if (z < 1e-8) return 1.0 + z / 2.0;
  return 2.0 + (z / 2.0) * (1.0 - 1.0 / std::tan(z / 2.0));
}
}  // namespace

ConvergenceSeries convergence_series(int l_max) {
  if (l_max < 1 || l_max > 20) throw std::invalid_argument("l_max out of range");
  ConvergenceSeries out;
  const int M = l_max + 1;  // series working order

  std::vector<double> fact(M + 1, 1.0);
  for (int j = 1; j <= M; ++j) fact[j] = fact[j - 1] * j;
  std::vector<double> g(M + 1, 0.0);
  for (int j = 0; j <= M; ++j) {
    double bj = j <= 20 ? std::abs((double)kBernNum[j] / (double)kBernDen[j]) : 0.0;
    if (j > 20) throw std::logic_error("Bernoulli table exhausted");
    g[j] = bj / fact[j];
    if (j <= l_max) out.bernoulli.push_back((double)kBernNum[j] / (double)kBernDen[j]);
  }

  // reciprocal series r = 1/g
  std::vector<double> r(M + 1, 0.0);
  r[0] = 1.0 / g[0];
  for (int nIdx = 1; nIdx <= M; ++nIdx) {
    double s = 0;
    for (int k = 1; k <= nIdx; ++k) s += g[k] * r[nIdx - k];
    r[nIdx] = -s / g[0];
  }
  // G(s) = int_0^s 1/g = sum_m Gm s^m with Gm = r_{m-1}/m
  std::vector<double> G(M + 2, 0.0);
  for (int m2 = 1; m2 <= M + 1; ++m2) G[m2] = r[m2 - 1] / m2;

  // reversion: find x with G(x(u)) = u, term by term
  std::vector<double> x(l_max + 1, 0.0);
  x[1] = 1.0 / G[1];
  for (int l = 2; l <= l_max; ++l) {
    // coefficient of u^l in G(x(u)) with x_l provisionally 0
    std::vector<double> comp(l + 1, 0.0);  // x(u)^m accumulated
    std::vector<double> xpow(l + 1, 0.0);  // current power of x-series
    xpow[0] = 1.0;
    for (int m2 = 1; m2 <= l; ++m2) {
      // xpow <- xpow * x (series product, truncated at l)
      std::vector<double> nxt(l + 1, 0.0);
      for (int i = 0; i <= l; ++i) {
        if (xpow[i] == 0.0) continue;
        for (int j = 1; j <= l - i && j < l; ++j) nxt[i + j] += xpow[i] * x[j];
      }
      xpow = nxt;
      for (int i = 0; i <= l; ++i) comp[i] += G[m2] * xpow[i];
    }
    x[l] = -comp[l] / G[1];
  }
  out.x.assign(x.begin() + 1, x.end());

  // threshold = G(2*pi)/2 by composite Gauss-Legendre on the closed form
  std::vector<double> nodes, weights;
  gauss_legendre(48, nodes, weights);
  const double zmax = 2.0 * M_PI;
  const int panels = 8;
  double integral = 0;
  for (int p = 0; p < panels; ++p) {
    double a = zmax * p / panels, b = zmax * (p + 1) / panels;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      double z = 0.5 * (b - a) * nodes[i] + 0.5 * (a + b);
      integral += 0.5 * (b - a) * weights[i] / g_closed(z);
    }
  }
  out.threshold = integral / 2.0;
  return out;
}

MagnusRemainder magnus_remainder_bound(int k, double alpha, double t,
                                       double h1_norm_integral,
                                       const ConvergenceSeries& series) {
  (void)t;  // the time dependence is inside h1_norm_integral
  const double arg = 2.0 * std::abs(alpha) * h1_norm_integral;
  if (arg >= 2.0 * series.threshold)
    throw std::domain_error("argument outside the convergence region");
  MagnusRemainder out;
  out.l_max = (int)series.x.size();
  for (int l = k + 1; l <= out.l_max; ++l)
    out.value += 0.5 * series.x[l - 1] * std::pow(arg, l);
  out.note = "series truncated at l_max=" + std::to_string(out.l_max) +
             "; omitted tail not included in the bound";
  return out;
}

}  // namespace thrift
