#include "tcent/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcent/bitmatrix.hpp"

namespace tcent {

namespace {

constexpr std::array<std::array<int, 2>, 3> kPlaneAxes{{{0, 1}, {0, 2}, {1, 2}}};

}  // namespace

const char* face_name(Face f) {
  switch (f) {
    case Face::XLow: return "x_lo";
    case Face::XHigh: return "x_hi";
    case Face::YLow: return "y_lo";
    case Face::YHigh: return "y_hi";
    case Face::ZLow: return "z_lo";
    case Face::ZHigh: return "z_hi";
  }
  return "?";
}

std::optional<Face> face_from_name(const std::string& s) {
  for (int i = 0; i < 6; ++i) {
    Face f = static_cast<Face>(i);
    if (s == face_name(f)) return f;
  }
  return std::nullopt;
}

void LatticeSpec::validate() const {
  if (dimension != 2 && dimension != 3) {
    throw std::invalid_argument("lattice dimension must be 2 or 3");
  }
  for (int a = 0; a < dimension; ++a) {
    if (extents[a] < 2) {
      throw std::invalid_argument("lattice extents must be >= 2");
    }
    bool lo_p = boundary[a][0] == Boundary::Periodic;
    bool hi_p = boundary[a][1] == Boundary::Periodic;
    if (lo_p != hi_p) {
      throw std::invalid_argument(
          "periodic boundary must be paired on both faces of an axis");
    }
  }
}

std::optional<std::array<int, 3>> CodeLattice::canonical_vertex(
    std::array<int, 3> v) const {
  for (int a = 0; a < 3; ++a) {
    if (a >= spec_.dimension) {
      if (v[a] != 0) return std::nullopt;
      continue;
    }
    if (spec_.periodic(a)) {
      int L = spec_.extents[a];
      v[a] = ((v[a] % L) + L) % L;
    } else if (v[a] < 0 || v[a] >= nv_[a]) {
      return std::nullopt;
    }
  }
  return v;
}

std::optional<uint32_t> CodeLattice::edge_id(const EdgeCoord& e) const {
  if (e.axis < 0 || e.axis >= spec_.dimension) return std::nullopt;
  auto v = canonical_vertex(e.v);
  if (!v) return std::nullopt;
  std::size_t idx =
      ((static_cast<std::size_t>((*v)[0]) * nv_[1] + (*v)[1]) * nv_[2] + (*v)[2]) * 3 +
      static_cast<std::size_t>(e.axis);
  int32_t id = edge_table_[idx];
  if (id < 0) return std::nullopt;
  return static_cast<uint32_t>(id);
}

std::vector<PauliWord> CodeLattice::all_generators() const {
  std::vector<PauliWord> gens;
  gens.reserve(stars_.size() + plaquettes_.size());
  for (const auto& s : stars_) gens.push_back(s.op);
  for (const auto& p : plaquettes_) gens.push_back(p.op);
  return gens;
}

CodeLattice build_toric_code(const LatticeSpec& spec) {
  spec.validate();
  CodeLattice lat;
  lat.spec_ = spec;

  const int dim = spec.dimension;
  for (int a = 0; a < 3; ++a) {
    if (a >= dim) {
      lat.nv_[a] = 1;
    } else {
      lat.nv_[a] = spec.periodic(a) ? spec.extents[a] : spec.extents[a] + 1;
    }
  }

  // An edge (v, axis) of the all-smooth lattice survives unless it is
  // tangential to a rough face and lies in that face's plane.
  auto edge_allowed = [&](const std::array<int, 3>& v, int axis) -> bool {
    if (!spec.periodic(axis) && v[axis] >= spec.extents[axis]) return false;
    for (int t = 0; t < dim; ++t) {
      if (t == axis || spec.periodic(t)) continue;
      if (spec.boundary[t][0] == Boundary::Rough && v[t] == 0) return false;
      if (spec.boundary[t][1] == Boundary::Rough && v[t] == spec.extents[t]) return false;
    }
    return true;
  };

  const std::size_t table_size =
      static_cast<std::size_t>(lat.nv_[0]) * lat.nv_[1] * lat.nv_[2] * 3;
  lat.edge_table_.assign(table_size, -1);

  std::array<int, 3> v{};
  for (v[0] = 0; v[0] < lat.nv_[0]; ++v[0]) {
    for (v[1] = 0; v[1] < lat.nv_[1]; ++v[1]) {
      for (v[2] = 0; v[2] < lat.nv_[2]; ++v[2]) {
        for (int a = 0; a < dim; ++a) {
          if (!edge_allowed(v, a)) continue;
          std::size_t idx =
              ((static_cast<std::size_t>(v[0]) * lat.nv_[1] + v[1]) * lat.nv_[2] + v[2]) *
                  3 +
              static_cast<std::size_t>(a);
          lat.edge_table_[idx] = static_cast<int32_t>(lat.edge_coords_.size());
          lat.edge_coords_.push_back({v, a});
        }
      }
    }
  }
  lat.n_qubits_ = lat.edge_coords_.size();

  const std::size_t n = lat.n_qubits_;
  lat.edge_stars_.assign(n, {});
  lat.edge_plaquettes_.assign(n, {});
  lat.rough_dangling_.assign(n, false);

  for (uint32_t e = 0; e < n; ++e) {
    const EdgeCoord& ec = lat.edge_coords_[e];
    int a = ec.axis;
    if (spec.periodic(a)) continue;
    if (spec.boundary[a][0] == Boundary::Rough && ec.v[a] == 0) {
      lat.rough_dangling_[e] = true;
    }
    if (spec.boundary[a][1] == Boundary::Rough && ec.v[a] == spec.extents[a] - 1) {
      lat.rough_dangling_[e] = true;
    }
  }

  // Stars: X on every surviving edge incident to the vertex.
  for (v[0] = 0; v[0] < lat.nv_[0]; ++v[0]) {
    for (v[1] = 0; v[1] < lat.nv_[1]; ++v[1]) {
      for (v[2] = 0; v[2] < lat.nv_[2]; ++v[2]) {
        std::vector<uint32_t> edges;
        for (int a = 0; a < dim; ++a) {
          if (auto id = lat.edge_id({v, a})) edges.push_back(*id);
          std::array<int, 3> u = v;
          u[a] -= 1;
          if (auto id = lat.edge_id({u, a})) edges.push_back(*id);
        }
        if (edges.size() < 2) continue;
        PauliWord op(n);
        for (uint32_t e : edges) op.set_x(e, true);
        uint32_t star_id = static_cast<uint32_t>(lat.stars_.size());
        lat.stars_.push_back({v, std::move(op)});
        for (uint32_t e : edges) lat.edge_stars_[e].push_back(star_id);
      }
    }
  }

  // Plaquettes: Z on the surviving edges of each face.
  for (int plane = 0; plane < (dim == 2 ? 1 : 3); ++plane) {
    int a = kPlaneAxes[plane][0];
    int b = kPlaneAxes[plane][1];
    for (v[0] = 0; v[0] < lat.nv_[0]; ++v[0]) {
      for (v[1] = 0; v[1] < lat.nv_[1]; ++v[1]) {
        for (v[2] = 0; v[2] < lat.nv_[2]; ++v[2]) {
          bool spans = true;  // the face must span a full cell along both axes
          for (int ax : {a, b}) {
            if (!spec.periodic(ax) && v[ax] + 1 > spec.extents[ax]) spans = false;
          }
          if (!spans) continue;
          std::array<int, 3> va = v, vb = v;
          va[a] += 1;
          vb[b] += 1;
          std::vector<uint32_t> edges;
          for (const auto& [base, axis] :
               {std::pair{v, a}, std::pair{v, b}, std::pair{vb, a}, std::pair{va, b}}) {
            if (auto id = lat.edge_id({base, axis})) edges.push_back(*id);
          }
          if (edges.size() < 2) continue;
          PauliWord op(n);
          for (uint32_t e : edges) op.set_z(e, true);
          uint32_t plq_id = static_cast<uint32_t>(lat.plaquettes_.size());
          lat.plaquettes_.push_back({v, plane, edges.size() < 4, std::move(op)});
          for (uint32_t e : edges) lat.edge_plaquettes_[e].push_back(plq_id);
        }
      }
    }
  }

  return lat;
}

namespace {

// Straight Z-line along `axis` at fixed transverse coordinates: a wrap cycle
// on a periodic axis, a rough-to-rough string on an open one.
std::optional<PauliWord> straight_z_line(const CodeLattice& lat, int axis, int offset) {
  const auto& spec = lat.spec();
  PauliWord op(lat.n_qubits());
  std::array<int, 3> v{0, 0, 0};
  for (int t = 0; t < spec.dimension; ++t) {
    if (t != axis) v[t] = offset;
  }
  for (int s = 0; s < spec.extents[axis]; ++s) {
    v[axis] = s;
    auto id = lat.edge_id({v, axis});
    if (!id) return std::nullopt;
    op.set_z(*id, true);
  }
  return op;
}

// Dual X-sheet: X on every `axis`-directed edge with base coordinate
// v[axis] == plane (a wrapping membrane in 3D, a wrapping dual path in 2D).
std::optional<PauliWord> x_sheet(const CodeLattice& lat, int axis, int plane) {
  PauliWord op(lat.n_qubits());
  bool any = false;
  for (uint32_t e = 0; e < lat.n_qubits(); ++e) {
    EdgeCoord ec = lat.edge_coord(e);
    if (ec.axis == axis && ec.v[axis] == plane) {
      op.set_x(e, true);
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return op;
}

bool commutes_with_code(const CodeLattice& lat, const PauliWord& c) {
  for (const auto& s : lat.stars()) {
    if (symplectic_product(s.op, c)) return false;
  }
  for (const auto& p : lat.plaquettes()) {
    if (symplectic_product(p.op, c)) return false;
  }
  return true;
}

}  // namespace

StabilizerState fix_ground_state(std::shared_ptr<const CodeLattice> lattice,
                                 CompletionStyle style) {
  const CodeLattice& lat = *lattice;
  const std::size_t n = lat.n_qubits();
  const std::size_t nw = PauliWord::word_count(n);

  StabilizerState state;
  state.lattice = lattice;

  // Independent stabilizer subset, greedy in enumeration order.
  GF2Span span(2 * nw);
  auto try_add = [&](const PauliWord& g) -> bool {
    if (!span.add(packed_xz(g))) return false;
    state.generators.push_back(g);
    return true;
  };
  for (const auto& s : lat.stars()) try_add(s.op);
  for (const auto& p : lat.plaquettes()) try_add(p.op);
  state.stabilizer_rank = state.generators.size();

  // Logical representatives. LowestFirst fixes Z-type cycles/strings at the
  // lowest transverse offsets; Alternate fixes the conjugate X-type sheets
  // instead, giving a genuinely different (still valid) ground state.
  const auto& spec = lat.spec();
  std::vector<PauliWord> candidates;
  for (int off : {0, 1, 2}) {
    for (int a = 0; a < spec.dimension; ++a) {
      bool wrap = spec.periodic(a);
      bool rough_pair = !wrap && spec.boundary[a][0] == Boundary::Rough &&
                        spec.boundary[a][1] == Boundary::Rough;
      if (!wrap && !rough_pair) continue;
      std::optional<PauliWord> c = style == CompletionStyle::LowestFirst
                                       ? straight_z_line(lat, a, off)
                                       : x_sheet(lat, a, off);
      if (c) candidates.push_back(*c);
    }
  }
  for (const auto& c : candidates) {
    if (state.generators.size() >= n) break;
    if (!commutes_with_code(lat, c)) continue;
    bool ok = true;
    for (std::size_t i = state.stabilizer_rank; i < state.generators.size(); ++i) {
      if (symplectic_product(state.generators[i], c)) {
        ok = false;
        break;
      }
    }
    if (ok) try_add(c);
  }

  // Remainder, for boundary mixes without straight representatives: canonical
  // kernel vectors of the opposite-type incidence matrix.
  if (state.generators.size() < n) {
    const bool z_type = style == CompletionStyle::LowestFirst;
    BitMatrix inc(z_type ? lat.stars().size() : lat.plaquettes().size(), nw * 64);
    if (z_type) {
      for (std::size_t i = 0; i < lat.stars().size(); ++i) {
        auto xs = lat.stars()[i].op.x_words();
        auto r = inc.row(i);
        for (std::size_t w = 0; w < nw; ++w) r[w] = xs[w];
      }
    } else {
      for (std::size_t i = 0; i < lat.plaquettes().size(); ++i) {
        auto zs = lat.plaquettes()[i].op.z_words();
        auto r = inc.row(i);
        for (std::size_t w = 0; w < nw; ++w) r[w] = zs[w];
      }
    }
    auto kernel = inc.right_nullspace();
    for (const auto& vbits : kernel) {
      if (state.generators.size() >= n) break;
      PauliWord c(n);
      for (std::size_t q = 0; q < n; ++q) {
        if ((vbits[q / 64] >> (q % 64)) & 1) {
          if (z_type) {
            c.set_z(q, true);
          } else {
            c.set_x(q, true);
          }
        }
      }
      if (!commutes_with_code(lat, c)) continue;
      bool ok = true;
      for (std::size_t i = state.stabilizer_rank; i < state.generators.size(); ++i) {
        if (symplectic_product(state.generators[i], c)) {
          ok = false;
          break;
        }
      }
      if (ok) try_add(c);
    }
  }

  if (state.generators.size() != n) {
    throw std::runtime_error("fix_ground_state: completion failed to reach full rank");
  }
  state.logical_count = n - state.stabilizer_rank;
  return state;
}

std::vector<PauliWord> independent_generating_set(const CodeLattice& lattice,
                                                  int excluded_plane_y) {
  const auto& spec = lattice.spec();
  if (spec.dimension != 3) {
    throw std::invalid_argument("independent_generating_set is defined for 3D lattices");
  }
  if (excluded_plane_y < 0 || excluded_plane_y >= lattice.vertex_counts()[1]) {
    throw std::invalid_argument("excluded_plane_y outside lattice");
  }
  std::vector<PauliWord> gens;
  const std::size_t nw = PauliWord::word_count(lattice.n_qubits());

  // Stars minus dependencies (greedy keeps the lowest-index independent set;
  // on a torus this drops exactly the last star).
  GF2Span span(2 * nw);
  for (const auto& s : lattice.stars()) {
    if (span.add(packed_xz(s.op))) gens.push_back(s.op);
  }

  // Plaquette planes: all xy (plane 0) and yz (plane 2); xz (plane 1) only
  // in the single fixed y-plane.
  for (const auto& p : lattice.plaquettes()) {
    if (p.plane == 0 || p.plane == 2 || p.corner[1] == excluded_plane_y) {
      gens.push_back(p.op);
    }
  }
  return gens;
}

}  // namespace tcent
