#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcent/pauli.hpp"

namespace tcent {

enum class Boundary { Periodic, Smooth, Rough };

/// One of the six cuboid faces, named by axis and side.
enum class Face { XLow, XHigh, YLow, YHigh, ZLow, ZHigh };

inline int face_axis(Face f) { return static_cast<int>(f) / 2; }
inline bool face_is_high(Face f) { return static_cast<int>(f) % 2 != 0; }
const char* face_name(Face f);
std::optional<Face> face_from_name(const std::string& s);

/// Cuboid toric-code lattice: `extents` unit cells per axis, and per face
/// either a periodic identification (both faces of the axis) or a smooth or
/// rough termination.
struct LatticeSpec {
  int dimension = 3;  // 2 or 3
  std::array<int, 3> extents{2, 2, 2};
  std::array<std::array<Boundary, 2>, 3> boundary{{
      {Boundary::Periodic, Boundary::Periodic},
      {Boundary::Periodic, Boundary::Periodic},
      {Boundary::Periodic, Boundary::Periodic},
  }};

  bool periodic(int axis) const { return boundary[axis][0] == Boundary::Periodic; }
  Boundary face(Face f) const { return boundary[face_axis(f)][face_is_high(f) ? 1 : 0]; }

  /// Throws std::invalid_argument on inconsistent specs (periodic paired
  /// with non-periodic on one axis, extents < 2, bad dimension).
  void validate() const;
};

/// An edge, identified by its base vertex and direction; the edge runs from
/// v to v + e_axis (coordinates wrap on periodic axes).
struct EdgeCoord {
  std::array<int, 3> v{0, 0, 0};
  int axis = 0;
  bool operator==(const EdgeCoord&) const = default;
};

/// Qubits live on edges. Edge ids are frozen: row-major over
/// (vx, vy, vz, axis) with axis fastest, compacted over existing edges, so
/// region files are portable across runs.
///
/// Construction: start from the all-smooth/periodic lattice (open axes carry
/// L+1 vertex planes), then for every rough face delete the tangential edges
/// lying in that face's plane. Generators with weight < 2 after the deletion
/// are dropped; weight-2 boundary plaquettes are kept. The perpendicular
/// edges left at a rough face keep only their inner star ("dangling" edges).
class CodeLattice {
public:
  struct Star {
    std::array<int, 3> vertex;
    PauliWord op;
  };
  // plane: 0 = xy, 1 = xz, 2 = yz (axes spanned); corner = lowest vertex.
  struct Plaquette {
    std::array<int, 3> corner;
    int plane;
    bool rough_truncated;  // lost at least one edge to a rough face
    PauliWord op;
  };

  const LatticeSpec& spec() const { return spec_; }
  std::size_t n_qubits() const { return n_qubits_; }

  const std::vector<Star>& stars() const { return stars_; }
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }

  /// All generator words, stars first then plaquettes (over-complete).
  std::vector<PauliWord> all_generators() const;

  std::optional<uint32_t> edge_id(const EdgeCoord& e) const;
  EdgeCoord edge_coord(uint32_t id) const { return edge_coords_[id]; }
  bool edge_exists(const EdgeCoord& e) const { return edge_id(e).has_value(); }

  const std::vector<uint32_t>& stars_on_edge(uint32_t edge) const {
    return edge_stars_[edge];
  }
  const std::vector<uint32_t>& plaquettes_on_edge(uint32_t edge) const {
    return edge_plaquettes_[edge];
  }

  /// True for edges perpendicular to a rough face in its outermost layer
  /// (the edges whose outer endpoint carries no star).
  bool is_rough_dangling(uint32_t edge) const { return rough_dangling_[edge]; }

  /// Vertex coordinate counts per axis (L for periodic, L+1 for open; 1 for
  /// the z axis of a 2D lattice).
  std::array<int, 3> vertex_counts() const { return nv_; }

  int axes() const { return spec_.dimension; }

  /// Wraps v into the fundamental domain on periodic axes; returns nullopt
  /// if v falls outside an open axis range.
  std::optional<std::array<int, 3>> canonical_vertex(std::array<int, 3> v) const;

private:
  friend CodeLattice build_toric_code(const LatticeSpec& spec);

  LatticeSpec spec_;
  std::array<int, 3> nv_{1, 1, 1};
  std::size_t n_qubits_ = 0;
  std::vector<int32_t> edge_table_;  // (vx,vy,vz,axis) -> id or -1
  std::vector<EdgeCoord> edge_coords_;
  std::vector<Star> stars_;
  std::vector<Plaquette> plaquettes_;
  std::vector<std::vector<uint32_t>> edge_stars_;
  std::vector<std::vector<uint32_t>> edge_plaquettes_;
  std::vector<bool> rough_dangling_;
};

CodeLattice build_toric_code(const LatticeSpec& spec);

/// Generator completion order for fix_ground_state; both styles yield valid
/// states and every entropy in the suite is identical between them.
enum class CompletionStyle { LowestFirst, Alternate };

/// A full-rank commuting generator set fixing one pure ground state:
/// an independent subset of the stabilizer generators plus deterministic
/// Z-type logical representatives (straight non-contractible cycles /
/// rough-to-rough strings at the lowest transverse coordinates, falling back
/// to canonical kernel vectors if geometry leaves a remainder).
struct StabilizerState {
  std::shared_ptr<const CodeLattice> lattice;  // may be null for synthetic states
  std::vector<PauliWord> generators;  // stabilizer part first, then logicals
  std::size_t stabilizer_rank = 0;
  std::size_t logical_count = 0;

  std::size_t n_qubits() const {
    if (!generators.empty()) return generators.front().n_qubits();
    return lattice ? lattice->n_qubits() : 0;
  }
};

StabilizerState fix_ground_state(std::shared_ptr<const CodeLattice> lattice,
                                 CompletionStyle style = CompletionStyle::LowestFirst);

/// App-style independent generating set of the stabilizer group (3D):
/// all stars minus dependencies, all xy- and yz-plaquettes, and xz-plaquettes
/// only in the single y-plane `excluded_plane_y`. Generates the same group
/// as the over-complete set.
std::vector<PauliWord> independent_generating_set(const CodeLattice& lattice,
                                                  int excluded_plane_y);

}  // namespace tcent
