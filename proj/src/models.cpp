#include "thrift/models.hpp"

#include <random>
#include <stdexcept>

namespace thrift {

std::string model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::tfim_1d: return "tfim_1d";
    case ModelKind::tfim_2d: return "tfim_2d";
    case ModelKind::heisenberg_1d: return "heisenberg_1d";
    case ModelKind::fermi_hubbard_1d: return "fermi_hubbard_1d";
  }
  throw std::logic_error("unreachable");
}

ModelKind model_kind_from_name(const std::string& s) {
  if (s == "tfim_1d") return ModelKind::tfim_1d;
  if (s == "tfim_2d") return ModelKind::tfim_2d;
  if (s == "heisenberg_1d") return ModelKind::heisenberg_1d;
  if (s == "fermi_hubbard_1d") return ModelKind::fermi_hubbard_1d;
  throw std::invalid_argument("unknown model kind: " + s);
}

std::vector<double> random_fields(int L, double h, std::uint64_t seed) {
  if (L < 1 || h < 0) throw std::invalid_argument("bad random_fields args");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-h, h);
  std::vector<double> out(L);
  for (auto& v : out) v = h == 0 ? 0.0 : dist(rng);
  return out;
}

namespace {

PauliString single(int n, int q, char op) {
  PauliString p(n);
  if (op == 'X' || op == 'Y') p.x.set(q);
  if (op == 'Z' || op == 'Y') p.z.set(q);
  return p;
}

PauliString pair_op(int n, int a, int b, char opa, char opb) {
  PauliString p(n);
  if (opa == 'X' || opa == 'Y') p.x.set(a);
  if (opa == 'Z' || opa == 'Y') p.z.set(a);
  if (opb == 'X' || opb == 'Y') p.x.set(b);
  if (opb == 'Z' || opb == 'Y') p.z.set(b);
  return p;
}

void finalize(PartitionedHamiltonian& part) {
  part.full = part.h0;
  for (auto& [label, g] : part.h1_groups) part.full.add(g, part.alpha);
  for (auto& [label, g] : part.h1_groups) {
    PauliSum combined = part.h0;
    combined.add(g, part.alpha == 0 ? 1.0 : part.alpha);
    part.group_layerings.push_back(group_layers(combined, part.block_size_for_thrift));
  }
}

}  // namespace

PartitionedHamiltonian build_model(const ModelSpec& spec) {
  if (spec.L < 1 || (spec.kind == ModelKind::tfim_2d && spec.Ly < 1))
    throw std::invalid_argument("nonpositive dimensions");
  PartitionedHamiltonian part;
  part.spec = spec;

  switch (spec.kind) {
    case ModelKind::tfim_1d: {
      const int n = spec.L;
      part.n_qubits = n;
      part.h0 = PauliSum(n);
      for (int j = 0; j < n; ++j) part.h0.add(single(n, j, 'Z'), spec.h);
      part.alpha = spec.J;
      PauliSum even(n), odd(n);
      for (int j = 0; j + 1 < n; ++j)
        (j % 2 == 0 ? even : odd).add(pair_op(n, j, j + 1, 'X', 'X'), 1.0);
      if (even.size()) part.h1_groups.emplace_back("xx_even", even);
      if (odd.size()) part.h1_groups.emplace_back("xx_odd", odd);
      part.block_size_for_thrift = 2;
      break;
    }
    case ModelKind::tfim_2d: {
      const int Lx = spec.L, Ly = spec.Ly, n = Lx * Ly;
      part.n_qubits = n;
      part.h0 = PauliSum(n);
      for (int j = 0; j < n; ++j) part.h0.add(single(n, j, 'Z'), spec.h);
      part.alpha = spec.J;
      auto idx = [Lx](int x, int y) { return x + Lx * y; };
      PauliSum he(n), ho(n), ve(n), vo(n);
      for (int y = 0; y < Ly; ++y)
        for (int x = 0; x + 1 < Lx; ++x)
          (x % 2 == 0 ? he : ho).add(pair_op(n, idx(x, y), idx(x + 1, y), 'X', 'X'), 1.0);
      for (int y = 0; y + 1 < Ly; ++y)
        for (int x = 0; x < Lx; ++x)
          (y % 2 == 0 ? ve : vo).add(pair_op(n, idx(x, y), idx(x, y + 1), 'X', 'X'), 1.0);
      for (auto& [label, g] : std::initializer_list<std::pair<const char*, PauliSum&>>{
               {"xx_h_even", he}, {"xx_h_odd", ho}, {"xx_v_even", ve}, {"xx_v_odd", vo}})
        if (g.size()) part.h1_groups.emplace_back(label, g);
      part.block_size_for_thrift = 2;
      break;
    }
    case ModelKind::heisenberg_1d: {
      const int n = spec.L;
      part.n_qubits = n;
      part.h0 = PauliSum(n);
      part.random_fields = random_fields(n, spec.h, spec.rng_seed);
      for (int j = 0; j < n; ++j) part.h0.add(single(n, j, 'Z'), part.random_fields[j]);
      part.alpha = spec.J;
      PauliSum even(n), odd(n);
      for (int j = 0; j + 1 < n; ++j) {
        PauliSum& g = (j % 2 == 0) ? even : odd;
        g.add(pair_op(n, j, j + 1, 'X', 'X'), 1.0);
        g.add(pair_op(n, j, j + 1, 'Y', 'Y'), 1.0);
        g.add(pair_op(n, j, j + 1, 'Z', 'Z'), 1.0);
      }
      if (even.size()) part.h1_groups.emplace_back("bond_even", even);
      if (odd.size()) part.h1_groups.emplace_back("bond_odd", odd);
      part.block_size_for_thrift = 2;
      break;
    }
    case ModelKind::fermi_hubbard_1d: {
      const int L = spec.L, n = 2 * L;  // up rail 0..L-1, down rail L..2L-1
      part.n_qubits = n;
      part.h0 = PauliSum(n);
      // U * n_up n_down = U (I - Z_i)(I - Z_{L+i}) / 4 on each rung
      for (int i = 0; i < L; ++i) {
        part.h0.add(PauliString(n), spec.U / 4.0);
        part.h0.add(single(n, i, 'Z'), -spec.U / 4.0);
        part.h0.add(single(n, L + i, 'Z'), -spec.U / 4.0);
        part.h0.add(pair_op(n, i, L + i, 'Z', 'Z'), spec.U / 4.0);
      }
      part.alpha = -spec.t_hop;
      PauliSum even(n), odd(n);
      for (int j = 0; j + 1 < L; ++j) {
        PauliSum& g = (j % 2 == 0) ? even : odd;
        for (int rail : {0, L}) {
          // c^dag_a c_b + h.c. = (X_a X_b + Y_a Y_b)/2 for adjacent sites
          g.add(pair_op(n, rail + j, rail + j + 1, 'X', 'X'), 0.5);
          g.add(pair_op(n, rail + j, rail + j + 1, 'Y', 'Y'), 0.5);
        }
      }
      if (even.size()) part.h1_groups.emplace_back("hop_even", even);
      if (odd.size()) part.h1_groups.emplace_back("hop_odd", odd);
      part.block_size_for_thrift = 4;
      break;
    }
  }
  finalize(part);
  return part;
}

}  // namespace thrift
