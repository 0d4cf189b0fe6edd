#pragma once
// Pauli-string algebra on up to 128 qubits: symplectic bitmask encoding,
// weighted sums, commutators, greedy layering, nested-commutator norm sums.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace thrift {

using cplx = std::complex<double>;

// Bit mask wide enough for 128 qubits (free-fermion runs go past 64 sites).
struct QubitMask {
  std::array<std::uint64_t, 2> w{0, 0};

  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void clear(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  QubitMask operator&(const QubitMask& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  QubitMask operator|(const QubitMask& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  QubitMask operator^(const QubitMask& o) const { return {{w[0] ^ o.w[0], w[1] ^ o.w[1]}}; }
  bool operator==(const QubitMask& o) const { return w == o.w; }
  bool operator!=(const QubitMask& o) const { return w != o.w; }
  bool operator<(const QubitMask& o) const {
    return w[1] != o.w[1] ? w[1] < o.w[1] : w[0] < o.w[0];
  }
  bool any() const { return w[0] | w[1]; }
  int popcount() const;
};

// n-qubit Pauli word: bit j of x/z set means X/Z acts on qubit j, both = Y.
struct PauliString {
  int n_qubits = 0;
  QubitMask x, z;

  PauliString() = default;
  explicit PauliString(int n) : n_qubits(n) {}
  // From a text label like "XIZY" (qubit 0 first).
  PauliString(int n, const std::string& label);

  bool is_identity() const { return !x.any() && !z.any(); }
  QubitMask support() const { return x | z; }
  int weight() const { return support().popcount(); }
  bool commutes_with(const PauliString& o) const;

  bool operator==(const PauliString& o) const {
    return n_qubits == o.n_qubits && x == o.x && z == o.z;
  }
  bool operator<(const PauliString& o) const {
    if (z != o.z) return z < o.z;
    return x < o.x;
  }
  std::string label() const;
};

// phase = i^k (k in 0..3), product = a*b up to that phase.
struct PauliProduct {
  int phase_pow;  // a*b = i^phase_pow * string
  PauliString string;
  cplx phase() const {
    static const cplx tab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return tab[phase_pow & 3];
  }
};

PauliProduct pauli_mul(const PauliString& a, const PauliString& b);

// Weighted sum of Pauli words; coefficients below prune_tol are dropped.
class PauliSum {
 public:
  static constexpr double kPruneTol = 1e-14;

  PauliSum() = default;
  explicit PauliSum(int n) : n_qubits_(n) {}

  int n_qubits() const { return n_qubits_; }
  const std::map<PauliString, cplx>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(const PauliString& p, cplx coeff);
  void add(const PauliSum& other, cplx scale = 1.0);
  PauliSum scaled(cplx s) const;
  PauliSum operator+(const PauliSum& o) const;

  bool is_hermitian(double tol = 1e-12) const;
  // True if every string is Z-type (diagonal in the computational basis).
  bool is_diagonal() const;
  double one_norm() const;

  Eigen::MatrixXcd to_dense() const;

 private:
  int n_qubits_ = 0;
  std::map<PauliString, cplx> terms_;
};

PauliSum commutator(const PauliSum& a, const PauliSum& b);

// Terms grouped into layers whose members fit into disjoint blocks of
// at most block_size qubits each (even/odd bond splittings and friends).
struct TermLayering {
  int block_size = 0;
  std::vector<std::vector<PauliString>> layers;
};

TermLayering group_layers(const PauliSum& h, int block_size);

// Largest-magnitude eigenvalue of a dense Hermitian operator.
double spectral_norm_dense(const PauliSum& h);

// Sum over all (p+1)-tuples from `parts` of the spectral norm of the nested
// commutator [part_{i_{p+1}}, [... [part_{i_2}, part_{i_1}] ...]].
double nested_commutator_sum(const std::vector<PauliSum>& parts, int p);

}  // namespace thrift
