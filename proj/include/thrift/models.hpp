#pragma once
// Benchmark Hamiltonians (1D/2D TFIM, disordered Heisenberg, Fermi-Hubbard
// chain under Jordan-Wigner) with their Trotter/THRIFT partitions.

#include <cstdint>
#include <string>
#include <vector>

#include "thrift/pauli.hpp"

namespace thrift {

enum class ModelKind { tfim_1d, tfim_2d, heisenberg_1d, fermi_hubbard_1d };

std::string model_kind_name(ModelKind k);
ModelKind model_kind_from_name(const std::string& s);

struct ModelSpec {
  ModelKind kind = ModelKind::tfim_1d;
  int L = 0;        // sites (chain length, or Lx for 2D)
  int Ly = 0;       // 2D only
  double h = 1.0;   // field
  double J = 0.0;   // spin-spin interaction (alpha for TFIM/Heisenberg)
  double t_hop = 0.0;  // hopping (alpha = -t_hop)
  double U = 1.0;      // on-site repulsion
  std::uint64_t rng_seed = 0;  // Heisenberg random fields
};

// H = H0 + alpha * sum_gamma H1^gamma, groups stored without the alpha factor.
struct PartitionedHamiltonian {
  ModelSpec spec;
  int n_qubits = 0;
  PauliSum h0;
  double alpha = 0;
  std::vector<std::pair<std::string, PauliSum>> h1_groups;
  PauliSum full;
  int block_size_for_thrift = 2;
  std::vector<TermLayering> group_layerings;  // of h0 + alpha*group, per group
  std::vector<double> random_fields;          // Heisenberg only (audit)
};

// Deterministic uniform draws in [-h, h] (mt19937_64).
std::vector<double> random_fields(int L, double h, std::uint64_t seed);

PartitionedHamiltonian build_model(const ModelSpec& spec);

}  // namespace thrift
