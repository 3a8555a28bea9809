#pragma once

#include <random>
#include <vector>

#include "tcent/bitmatrix.hpp"
#include "tcent/lattice.hpp"
#include "tcent/pauli.hpp"
#include "tcent/region.hpp"

namespace tcent::test {

// Random full-rank commuting generator set: the computational-basis group
// {Z_i} pushed through a random real Clifford circuit (H, CX, CZ) at the bit
// level, with random signs. Real gates keep every generator involutive
// (even x/z overlap), which is the representable subgroup here.
inline StabilizerState random_stabilizer_state(std::size_t n, std::mt19937_64& rng) {
  std::vector<PauliWord> gens;
  gens.reserve(n);
  for (std::size_t q = 0; q < n; ++q) gens.push_back(PauliWord::single_z(n, q));

  auto h = [&](std::size_t q) {
    for (auto& g : gens) {
      bool x = g.x(q), z = g.z(q);
      g.set_x(q, z);
      g.set_z(q, x);
    }
  };
  auto cx = [&](std::size_t a, std::size_t b) {
    for (auto& g : gens) {
      if (g.x(a)) g.set_x(b, !g.x(b));
      if (g.z(b)) g.set_z(a, !g.z(a));
    }
  };
  auto cz = [&](std::size_t a, std::size_t b) {
    for (auto& g : gens) {
      if (g.x(a)) g.set_z(b, !g.z(b));
      if (g.x(b)) g.set_z(a, !g.z(a));
    }
  };

  std::uniform_int_distribution<int> gate(0, 2);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  for (std::size_t step = 0; step < 4 * n * n; ++step) {
    std::size_t a = qubit(rng), b = qubit(rng);
    switch (gate(rng)) {
      case 0: h(a); break;
      case 1:
        if (a != b) cx(a, b);
        break;
      default:
        if (a != b) cz(a, b);
        break;
    }
  }
  for (auto& g : gens) {
    g.set_sign(rng() & 1 ? 1 : -1);
  }

  StabilizerState st;
  st.lattice = nullptr;
  st.generators = std::move(gens);
  st.stabilizer_rank = n;
  st.logical_count = 0;
  return st;
}

// StabilizerState without a lattice cannot serve lattice-based helpers; give
// the entropy engines what they need directly.
struct BareState {
  std::size_t n;
  std::vector<PauliWord> gens;
};

inline Region random_region(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  Region r(n, "random");
  std::bernoulli_distribution coin(p);
  for (std::size_t q = 0; q < n; ++q) {
    if (coin(rng)) r.insert(static_cast<uint32_t>(q));
  }
  return r;
}

// Brute-force GF(2) row rank by enumerating the row span (<= 12 columns).
inline std::size_t brute_force_rank(const BitMatrix& m) {
  std::vector<uint64_t> span_elems{0};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    uint64_t row_bits = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.bit(r, c)) row_bits |= uint64_t{1} << c;
    }
    std::vector<uint64_t> next = span_elems;
    for (uint64_t e : span_elems) next.push_back(e ^ row_bits);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span_elems = std::move(next);
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < span_elems.size()) ++k;
  return k;
}

// Half the GF(2) rank of the symplectic Gram matrix of the restrictions:
// an independent route to the region entropy of a pure stabilizer state.
inline int64_t gram_entropy(std::span<const PauliWord> gens, const Region& region) {
  std::vector<PauliWord> restr;
  for (const auto& g : gens) restr.push_back(g.restricted(region.mask()));
  BitMatrix gram(restr.size(), restr.size());
  for (std::size_t i = 0; i < restr.size(); ++i) {
    for (std::size_t j = i + 1; j < restr.size(); ++j) {
      if (symplectic_product(restr[i], restr[j])) {
        gram.set(i, j, true);
        gram.set(j, i, true);
      }
    }
  }
  return static_cast<int64_t>(gram.rank() / 2);
}

inline LatticeSpec torus3(int L) {
  LatticeSpec s;
  s.dimension = 3;
  s.extents = {L, L, L};
  return s;
}

inline LatticeSpec torus2(int L) {
  LatticeSpec s;
  s.dimension = 2;
  s.extents = {L, L, 1};
  return s;
}

// 3D lattice, z axis open with the given faces, x/y periodic.
inline LatticeSpec slab3(int L, Boundary z_lo, Boundary z_hi) {
  LatticeSpec s;
  s.dimension = 3;
  s.extents = {L, L, L};
  s.boundary[2] = {z_lo, z_hi};
  return s;
}

}  // namespace tcent::test
