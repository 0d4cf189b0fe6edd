#include "thrift/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace thrift {

int QubitMask::popcount() const {
  return std::popcount(w[0]) + std::popcount(w[1]);
}

PauliString::PauliString(int n, const std::string& label) : n_qubits(n) {
  if ((int)label.size() != n) throw std::invalid_argument("label length != n_qubits");
  for (int i = 0; i < n; ++i) {
    switch (label[i]) {
      case 'I': break;
      case 'X': x.set(i); break;
      case 'Z': z.set(i); break;
      case 'Y': x.set(i); z.set(i); break;
      default: throw std::invalid_argument("bad Pauli label char");
    }
  }
}

std::string PauliString::label() const {
  std::string s(n_qubits, 'I');
  for (int i = 0; i < n_qubits; ++i) {
    bool xb = x.get(i), zb = z.get(i);
    s[i] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

bool PauliString::commutes_with(const PauliString& o) const {
  return (((x & o.z).popcount() + (z & o.x).popcount()) & 1) == 0;
}

PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits) throw std::invalid_argument("qubit count mismatch");
  // Per-qubit code: 0=I, 1=X, 2=Z, 3=Y; sigma_a*sigma_b = i^t[a][b] sigma_{a xor b}.
  static const int t[4][4] = {
      {0, 0, 0, 0},
      {0, 0, 3, 1},
      {0, 1, 0, 3},
      {0, 3, 1, 0},
  };
  int k = 0;
  QubitMask both = a.support() | b.support();
  for (int i = 0; i < a.n_qubits; ++i) {
    if (!both.get(i)) continue;
    int ca = (a.x.get(i) ? 1 : 0) | (a.z.get(i) ? 2 : 0);
    int cb = (b.x.get(i) ? 1 : 0) | (b.z.get(i) ? 2 : 0);
    k += t[ca][cb];
  }
  PauliString prod(a.n_qubits);
  prod.x = a.x ^ b.x;
  prod.z = a.z ^ b.z;
  return {k & 3, prod};
}

void PauliSum::add(const PauliString& p, cplx coeff) {
  if (n_qubits_ == 0) n_qubits_ = p.n_qubits;
  if (p.n_qubits != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (std::abs(coeff) > kPruneTol) terms_.emplace(p, coeff);
  } else {
    it->second += coeff;
    if (std::abs(it->second) <= kPruneTol) terms_.erase(it);
  }
}

void PauliSum::add(const PauliSum& other, cplx scale) {
  for (const auto& [p, c] : other.terms_) add(p, c * scale);
}

PauliSum PauliSum::scaled(cplx s) const {
  PauliSum out(n_qubits_);
  out.add(*this, s);
  return out;
}

PauliSum PauliSum::operator+(const PauliSum& o) const {
  PauliSum out = *this;
  out.add(o);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [p, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

bool PauliSum::is_diagonal() const {
  for (const auto& [p, c] : terms_)
    if (p.x.any()) return false;
  return true;
}

double PauliSum::one_norm() const {
  double s = 0;
  for (const auto& [p, c] : terms_) s += std::abs(c);
  return s;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
  if (n_qubits_ > 14) throw std::runtime_error("dense cap exceeded");
  const std::size_t dim = std::size_t{1} << n_qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [p, c] : terms_) {
    const std::uint64_t xm = p.x.w[0], zm = p.z.w[0];
    const cplx yphase = ipow[(p.x & p.z).popcount() & 3];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const double sign = (std::popcount(col & zm) & 1) ? -1.0 : 1.0;
      m(col ^ xm, col) += c * yphase * sign;
    }
  }
  return m;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  PauliSum out(a.n_qubits());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      if (pa.commutes_with(pb)) continue;
      PauliProduct ab = pauli_mul(pa, pb);
      out.add(ab.string, 2.0 * ca * cb * ab.phase());
    }
  return out;
}

TermLayering group_layers(const PauliSum& h, int block_size) {
  TermLayering out;
  out.block_size = block_size;
  // Each layer keeps a list of block support masks; a term joins a layer if
  // the union of its support with every block it touches stays within budget
  // (touched blocks then merge into one).
  std::vector<std::vector<QubitMask>> blocks;
  for (const auto& [p, c] : h.terms()) {
    QubitMask sup = p.support();
    if (sup.popcount() > block_size) throw std::invalid_argument("term support exceeds block size");
    bool placed = false;
    for (std::size_t l = 0; l < out.layers.size() && !placed; ++l) {
      QubitMask merged = sup;
      std::vector<std::size_t> hits;
      for (std::size_t b = 0; b < blocks[l].size(); ++b)
        if ((sup & blocks[l][b]).any()) {
          hits.push_back(b);
          merged = merged | blocks[l][b];
        }
      if (merged.popcount() > block_size) continue;
      for (auto it = hits.rbegin(); it != hits.rend(); ++it)
        blocks[l].erase(blocks[l].begin() + *it);
      blocks[l].push_back(merged);
      out.layers[l].push_back(p);
      placed = true;
    }
    if (!placed) {
      out.layers.push_back({p});
      blocks.push_back({sup});
    }
  }
  return out;
}

double spectral_norm_dense(const PauliSum& h) {
  if (h.size() == 0) return 0.0;
  Eigen::MatrixXcd m = h.to_dense();
  if (h.is_hermitian()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  }
  // Anti-Hermitian or general small case: use i*m if anti-Hermitian, else SVD.
  Eigen::MatrixXcd im = cplx(0, 1) * m;
  if ((im - im.adjoint()).cwiseAbs().maxCoeff() < 1e-12) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(im, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  }
  return m.jacobiSvd().singularValues()(0);
}

double nested_commutator_sum(const std::vector<PauliSum>& parts, int p) {
  if (p < 1 || p > 2) throw std::invalid_argument("p must be 1 or 2");
  for (const auto& h : parts)
    if (h.n_qubits() > 12) throw std::invalid_argument("system too large for dense norms");
  const int G = (int)parts.size();
  double total = 0;
  if (p == 1) {
    for (int g1 = 0; g1 < G; ++g1)
      for (int g2 = 0; g2 < G; ++g2)
        total += spectral_norm_dense(commutator(parts[g2], parts[g1]));
  } else {
    for (int g1 = 0; g1 < G; ++g1)
      for (int g2 = 0; g2 < G; ++g2) {
        PauliSum inner = commutator(parts[g2], parts[g1]);
        for (int g3 = 0; g3 < G; ++g3)
          total += spectral_norm_dense(commutator(parts[g3], inner));
      }
  }
  return total;
}

}  // namespace thrift
