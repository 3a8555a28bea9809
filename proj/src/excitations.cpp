#include "tcent/excitations.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tcent/bitmatrix.hpp"

namespace tcent {

namespace {

void check_edges(const CodeLattice& lat, std::span<const uint32_t> edges) {
  for (uint32_t e : edges) {
    if (e >= lat.n_qubits()) {
      throw std::out_of_range("edge id out of range");
    }
  }
  if (edges.empty()) {
    throw std::invalid_argument("excitation support must be nonempty");
  }
}

bool edges_share_vertex(const CodeLattice& lat, uint32_t a, uint32_t b) {
  EdgeCoord ea = lat.edge_coord(a);
  EdgeCoord eb = lat.edge_coord(b);
  auto ends = [&](const EdgeCoord& e) {
    std::array<std::array<int, 3>, 2> v{e.v, e.v};
    v[1][e.axis] += 1;
    for (auto& vv : v) {
      if (auto c = lat.canonical_vertex(vv)) vv = *c;
    }
    return v;
  };
  auto va = ends(ea);
  auto vb = ends(eb);
  for (const auto& x : va) {
    for (const auto& y : vb) {
      if (x == y) return true;
    }
  }
  return false;
}

bool edges_share_plaquette(const CodeLattice& lat, uint32_t a, uint32_t b) {
  const auto& pa = lat.plaquettes_on_edge(a);
  const auto& pb = lat.plaquettes_on_edge(b);
  for (uint32_t p : pa) {
    if (std::find(pb.begin(), pb.end(), p) != pb.end()) return true;
  }
  return false;
}

void check_connected(const CodeLattice& lat, std::span<const uint32_t> edges,
                     bool via_plaquette, const char* what) {
  std::vector<char> seen(edges.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (seen[j]) continue;
      bool adj = via_plaquette ? edges_share_plaquette(lat, edges[i], edges[j])
                               : edges_share_vertex(lat, edges[i], edges[j]);
      if (adj) {
        seen[j] = 1;
        ++reached;
        queue.push_back(j);
      }
    }
  }
  if (reached != edges.size()) {
    throw std::invalid_argument(what);
  }
}

}  // namespace

ExcitationProcess z_string(const CodeLattice& lattice,
                           std::span<const uint32_t> path_edges) {
  check_edges(lattice, path_edges);
  check_connected(lattice, path_edges, /*via_plaquette=*/false,
                  "z_string: path is not connected");
  ExcitationProcess p;
  p.kind = ExcitationKind::ZString;
  p.support.assign(path_edges.begin(), path_edges.end());
  p.op = PauliWord(lattice.n_qubits());
  for (uint32_t e : path_edges) p.op.set_z(e, !p.op.z(e));
  return p;
}

ExcitationProcess x_membrane(const CodeLattice& lattice,
                             std::span<const uint32_t> membrane_edges) {
  check_edges(lattice, membrane_edges);
  check_connected(lattice, membrane_edges, /*via_plaquette=*/true,
                  "x_membrane: surface is not connected");
  ExcitationProcess p;
  p.kind = ExcitationKind::XMembrane;
  p.support.assign(membrane_edges.begin(), membrane_edges.end());
  p.op = PauliWord(lattice.n_qubits());
  for (uint32_t e : membrane_edges) p.op.set_x(e, !p.op.x(e));
  return p;
}

Syndrome syndrome(const CodeLattice& lattice, const PauliWord& p) {
  Syndrome s;
  const auto& stars = lattice.stars();
  for (uint32_t i = 0; i < stars.size(); ++i) {
    if (symplectic_product(stars[i].op, p)) s.violated_stars.push_back(i);
  }
  const auto& plqs = lattice.plaquettes();
  for (uint32_t i = 0; i < plqs.size(); ++i) {
    if (symplectic_product(plqs[i].op, p)) s.violated_plaquettes.push_back(i);
  }
  return s;
}

Syndrome syndrome(const StabilizerState& state, const PauliWord& p) {
  return syndrome(*state.lattice, p);
}

bool in_state_group(const StabilizerState& state, const PauliWord& p) {
  BitMatrix m = check_matrix(state.generators);
  return m.solve_left(packed_xz(p)).has_value();
}

DeformableResult is_deformable_equivalent(const StabilizerState& state,
                                          const PauliWord& u, const PauliWord& u_def) {
  if (u.n_qubits() != state.n_qubits() || u_def.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("operator size does not match the state");
  }
  // Deformability is membership of the difference in the stabilizer group
  // proper: a difference by a fixed logical representative still acts
  // trivially on this ground state, but the supports are not continuously
  // deformable into each other, so it does not count.
  PauliWord diff = u * u_def;
  std::span<const PauliWord> stab(state.generators.data(), state.stabilizer_rank);
  BitMatrix m = check_matrix(stab);
  auto combo = m.solve_left(packed_xz(diff));
  if (!combo) return {false, 0};
  // Rebuild the actual group element to recover the relative phase.
  PauliWord g(state.n_qubits());
  for (std::size_t i = 0; i < stab.size(); ++i) {
    if (((*combo)[i / 64] >> (i % 64)) & 1) g *= state.generators[i];
  }
  PauliWord p = u_def * g;
  if (!p.same_bits(u)) {
    throw std::logic_error("membership solve produced inconsistent bits");
  }
  return {true, u.sign() == p.sign() ? 1 : -1};
}

double monodromy_norm(const StabilizerState& state, const PauliWord& u,
                      const PauliWord& v) {
  if (!in_state_group(state, v)) {
    throw std::invalid_argument(
        "monodromy_norm: v does not act trivially on the ground state");
  }
  return symplectic_product(u, v) ? 2.0 : 0.0;
}

namespace {

// Straight inward path of face-normal edges at the transverse center,
// running from the face to depth `depth`.
std::vector<uint32_t> straight_probe_path(const CodeLattice& lat, Face face, int depth) {
  const auto& spec = lat.spec();
  int axis = face_axis(face);
  bool high = face_is_high(face);
  int L = spec.extents[axis];
  std::array<int, 3> v{0, 0, 0};
  for (int a = 0; a < spec.dimension; ++a) {
    if (a != axis) v[a] = spec.extents[a] / 2;
  }
  std::vector<uint32_t> path;
  for (int w = 0; w < depth; ++w) {
    v[axis] = high ? L - 1 - w : w;
    auto id = lat.edge_id({v, axis});
    if (!id) throw std::logic_error("probe path leaves the lattice");
    path.push_back(*id);
  }
  return path;
}

}  // namespace

ExcitationProcess enclosing_membrane(const CodeLattice& lattice,
                                     const std::array<int, 3>& lo,
                                     const std::array<int, 3>& hi) {
  auto inside = [&](std::array<int, 3> v) {
    auto c = lattice.canonical_vertex(v);
    if (!c) return false;
    for (int a = 0; a < lattice.spec().dimension; ++a) {
      if ((*c)[a] < lo[a] || (*c)[a] > hi[a]) return false;
    }
    return true;
  };
  std::vector<uint32_t> edges;
  for (uint32_t e = 0; e < lattice.n_qubits(); ++e) {
    EdgeCoord ec = lattice.edge_coord(e);
    std::array<int, 3> a = ec.v, b = ec.v;
    b[ec.axis] += 1;
    if (inside(a) != inside(b)) edges.push_back(e);
  }
  return x_membrane(lattice, edges);
}

ExcitationProcess boundary_probe(const CodeLattice& lattice, Face face,
                                 ExcitationKind kind) {
  const auto& spec = lattice.spec();
  int axis = face_axis(face);
  if (spec.periodic(axis)) {
    throw std::invalid_argument("condensation check requires a physical face");
  }
  if (kind == ExcitationKind::ZString) {
    int depth = std::max(1, spec.extents[axis] / 2);
    return z_string(lattice, straight_probe_path(lattice, face, depth));
  }
  if (spec.dimension != 3) {
    throw std::invalid_argument("line-excitation probes require a 3D lattice");
  }
  // Half-open box membrane through the face: one endpoint inside the vertex
  // box that extends through the boundary plane.
  bool high = face_is_high(face);
  int L = spec.extents[axis];
  int h = std::max(1, L / 2);
  std::array<int, 3> lo{}, hi{};
  for (int a = 0; a < 3; ++a) {
    if (a == axis) {
      lo[a] = high ? L - h : 0;
      hi[a] = high ? L : h;
    } else {
      int c = spec.extents[a] / 2;
      lo[a] = c - 1;
      hi[a] = c + 1;
    }
  }
  auto inside = [&](std::array<int, 3> v) {
    auto c = lattice.canonical_vertex(v);
    if (!c) return false;
    for (int a = 0; a < 3; ++a) {
      if ((*c)[a] < lo[a] || (*c)[a] > hi[a]) return false;
    }
    return true;
  };
  std::vector<uint32_t> edges;
  for (uint32_t e = 0; e < lattice.n_qubits(); ++e) {
    EdgeCoord ec = lattice.edge_coord(e);
    std::array<int, 3> a = ec.v, b = ec.v;
    b[ec.axis] += 1;
    if (inside(a) != inside(b)) edges.push_back(e);
  }
  return x_membrane(lattice, edges);
}

bool condensation_check(const StabilizerState& state, Face face, ExcitationKind kind) {
  const CodeLattice& lat = *state.lattice;
  const auto& spec = lat.spec();
  int axis = face_axis(face);
  if (spec.periodic(axis)) {
    throw std::invalid_argument("condensation check requires a physical face");
  }
  ExcitationProcess probe = boundary_probe(lat, face, kind);
  Syndrome syn = syndrome(lat, probe.op);
  if (kind == ExcitationKind::XMembrane) {
    return syn.empty();
  }
  // Point probe: condensed iff only the far-end star is violated.
  if (!syn.violated_plaquettes.empty() || syn.violated_stars.size() != 1) {
    return false;
  }
  bool high = face_is_high(face);
  int L = spec.extents[axis];
  int depth = std::max(1, L / 2);
  std::array<int, 3> far{0, 0, 0};
  for (int a = 0; a < spec.dimension; ++a) {
    if (a != axis) far[a] = spec.extents[a] / 2;
  }
  far[axis] = high ? L - depth : depth;
  uint32_t sid = syn.violated_stars.front();
  return lat.stars()[sid].vertex == far;
}

}  // namespace tcent
