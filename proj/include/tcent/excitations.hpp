#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tcent/lattice.hpp"
#include "tcent/pauli.hpp"
#include "tcent/region.hpp"

namespace tcent {

enum class ExcitationKind { ZString, XMembrane };

/// A creation process at the stabilizer level: its net Pauli word plus the
/// geometric support it was built from.
struct ExcitationProcess {
  ExcitationKind kind = ExcitationKind::ZString;
  std::vector<uint32_t> support;  // edge ids
  PauliWord op;
};

/// Z on each edge of a connected path. Throws on disconnected input.
ExcitationProcess z_string(const CodeLattice& lattice,
                           std::span<const uint32_t> path_edges);

/// X on each edge of a connected membrane (a set of dual faces; dual faces
/// are identified with the edges they are pierced by). Two dual faces are
/// adjacent when their edges share a plaquette. Throws on disconnected input.
ExcitationProcess x_membrane(const CodeLattice& lattice,
                             std::span<const uint32_t> membrane_edges);

struct Syndrome {
  std::vector<uint32_t> violated_stars;
  std::vector<uint32_t> violated_plaquettes;
  bool empty() const { return violated_stars.empty() && violated_plaquettes.empty(); }
  std::size_t size() const {
    return violated_stars.size() + violated_plaquettes.size();
  }
};

/// Stabilizer generators of the lattice that anticommute with p.
Syndrome syndrome(const CodeLattice& lattice, const PauliWord& p);
Syndrome syndrome(const StabilizerState& state, const PauliWord& p);

struct DeformableResult {
  bool equivalent = false;
  int sign = 0;  // u |psi> = sign * u_def |psi> when equivalent
};

/// True iff u * u_def lies in the state's generator group (GF(2) membership
/// solve), i.e. the two processes act identically on the ground state up to
/// the returned sign.
DeformableResult is_deformable_equivalent(const StabilizerState& state,
                                          const PauliWord& u, const PauliWord& u_def);

/// True iff p's bit pattern lies in the span of the state's generators.
bool in_state_group(const StabilizerState& state, const PauliWord& p);

/// ||UV|psi> - VU|psi>|| for Pauli words: 0 when they commute, 2 when they
/// anticommute. Requires v to act trivially on the ground state (membership
/// in the state group); throws std::invalid_argument otherwise.
double monodromy_norm(const StabilizerState& state, const PauliWord& u,
                      const PauliWord& v);

/// Whether a half-excitation terminating on the face is absorbed:
///  - point: a straight Z-string from mid-bulk to the face violates only its
///    far-end star;
///  - line: a box membrane opened through the face (X on every edge crossing
///    the box wall above the face) has an empty syndrome.
/// Throws std::invalid_argument for a periodic face.
bool condensation_check(const StabilizerState& state, Face face, ExcitationKind kind);

/// The half-excitation used by condensation_check, exposed for reporting.
ExcitationProcess boundary_probe(const CodeLattice& lattice, Face face,
                                 ExcitationKind kind);

/// Box-surface X membrane: X on every edge with exactly one endpoint inside
/// the vertex box [lo, hi] (the product of the enclosed stars when the box
/// is in the bulk).
ExcitationProcess enclosing_membrane(const CodeLattice& lattice,
                                     const std::array<int, 3>& lo,
                                     const std::array<int, 3>& hi);

}  // namespace tcent
