#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tcent/lattice.hpp"
#include "tcent/pauli.hpp"

namespace tcent {

/// A set of qubits (edges) of one lattice, stored as a bit mask.
class Region {
public:
  Region() = default;

  Region(std::size_t n_qubits, std::string provenance = {})
      : n_(n_qubits),
        mask_(PauliWord::word_count(n_qubits), 0),
        provenance_(std::move(provenance)) {}

  static Region from_qubits(std::size_t n, std::span<const uint32_t> qubits,
                            std::string provenance = {});
  static Region full(std::size_t n, std::string provenance = "full");

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(uint32_t q) const { return (mask_[q / 64] >> (q % 64)) & 1; }
  void insert(uint32_t q);
  void erase(uint32_t q);

  std::span<const uint64_t> mask() const { return mask_; }
  std::vector<uint32_t> qubits() const;

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  Region complement() const;
  bool disjoint_with(const Region& o) const;
  bool operator==(const Region& o) const { return n_ == o.n_ && mask_ == o.mask_; }

  friend Region operator|(const Region& a, const Region& b);
  friend Region operator&(const Region& a, const Region& b);
  friend Region operator-(const Region& a, const Region& b);

private:
  void check_compatible(const Region& o) const;

  std::size_t n_ = 0;
  std::vector<uint64_t> mask_;
  std::string provenance_;
};

inline PauliWord restrict_to(const PauliWord& p, const Region& r) {
  return p.restricted(r.mask());
}

/// Axis-aligned box in vertex coordinates; half-integer corners are allowed
/// (and meaningful under the midpoint rule). On periodic axes the interval
/// is taken modulo the lattice period.
struct Box {
  std::array<double, 3> lo{0, 0, 0};
  std::array<double, 3> hi{0, 0, 0};
};

/// Midpoint rule: an edge belongs to the region iff its midpoint lies in the
/// closed box. An empty or inverted box yields an empty region.
Region box_region(const CodeLattice& lattice, const Box& box);

/// Outer box minus inner box.
Region annulus_region(const CodeLattice& lattice, const Box& outer, const Box& inner);

/// Geometric surface data of a region: `area` counts the stars cut by the
/// region boundary; `components_total` (n_R) counts connected components of
/// the cut-star set under shared-cut-plaquette adjacency; and
/// `components_rough_free` (N_R) drops the components anchored on a rough
/// face (those owning a cut star whose rough dangling edge lies inside the
/// region).
struct AreaReport {
  int64_t area = 0;
  int64_t components_total = 0;
  int64_t components_rough_free = 0;
};

AreaReport area_report(const CodeLattice& lattice, const Region& region);

/// The four-region split used by the invariant combinations, plus the
/// excitation-site metadata carried along for reports.
struct PartitionABCD {
  Region a, b, c, d;
  std::vector<uint32_t> p_sites, q_sites;  // excitation sites, inside A
};

/// Point-invariant partition against one physical face: D is two slabs on
/// the face where the point excitations sit, C is the slab bridging them,
/// and B is the arch straddling C (feet on the face). All sizes in cells.
struct PointPartitionParams {
  Face face = Face::ZLow;
  int slab = 2;        // D slab extent along the row direction
  int bridge = 2;      // C extent along the row direction
  int width = 2;       // transverse extent of the D/C row
  int height = 2;      // extent away from the face
  int wrap = 1;        // B arch thickness
  std::array<int, 2> origin{2, 2};  // row/transverse offset of the D1 corner
};

PartitionABCD partition_point(const CodeLattice& lattice,
                              const PointPartitionParams& params);

/// Line-invariant partition: D is a ring on the face around the foot of the
/// column C, which rises from the face; B is the hood (cap plus skirt)
/// covering C's top and upper sides without touching the face.
struct LinePartitionParams {
  Face face = Face::ZLow;
  int core = 2;        // C column cross-section (square), in cells
  int ring = 2;        // D ring thickness
  int ring_height = 2; // D ring extent away from the face
  int column = 2;      // extra C column height above the D ring
  int hood = 1;        // B cap/skirt thickness
  std::array<int, 2> origin{3, 3};  // transverse offset of the C column corner
};

PartitionABCD partition_line(const CodeLattice& lattice,
                             const LinePartitionParams& params);

/// 2D partition: an annular band split into four arcs. A is the left arc
/// (carrying the two excitation sites against the central hole), B the top
/// and bottom arcs, C the right arc, and D the rest of the torus (hole plus
/// exterior). C's closure meets only B and D, so area terms cancel in the
/// invariant combination.
struct TwoDPartitionParams {
  int outer = 1;   // outer box corner offset (outer box = [outer, L-outer]^2)
  int hole = 3;    // hole box corner offset (hole box = [hole, L-hole]^2)
};

PartitionABCD partition_2d(const CodeLattice& lattice, const TwoDPartitionParams& params);

}  // namespace tcent
