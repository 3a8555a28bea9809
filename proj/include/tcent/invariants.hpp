#pragma once

#include <cstdint>
#include <string>

#include "tcent/entropy.hpp"
#include "tcent/region.hpp"

namespace tcent {

enum class InvariantKind { Gamma2D, GammaPoint, GammaLine };

const char* invariant_kind_name(InvariantKind k);

/// Four-region entropy combination, with the per-term entropies kept so a
/// nonzero value is auditable term by term.
struct InvariantReport {
  InvariantKind kind = InvariantKind::Gamma2D;
  int64_t value_bits = 0;
  int64_t s_bc = 0, s_cd = 0, s_b = 0, s_d = 0;
  AreaReport area_b, area_c, area_d, area_bc, area_cd;
};

/// value = S(BC) + S(CD) - S(B) - S(D); the same combination serves the 2D
/// case and both 3D boundary invariants.
InvariantReport tee_combination(const StabilizerState& state, const PartitionABCD& p,
                                InvariantKind kind);

InvariantReport gamma_point(const StabilizerState& state,
                            const PointPartitionParams& params);

InvariantReport gamma_line(const StabilizerState& state,
                           const LinePartitionParams& params);

InvariantReport gamma_2d(const StabilizerState& state, const TwoDPartitionParams& params);

}  // namespace tcent
