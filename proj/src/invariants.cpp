#include "tcent/invariants.hpp"

#include <stdexcept>

namespace tcent {

const char* invariant_kind_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::Gamma2D: return "gamma_2d_combination";
    case InvariantKind::GammaPoint: return "gamma_point";
    case InvariantKind::GammaLine: return "gamma_line";
  }
  return "?";
}

InvariantReport tee_combination(const StabilizerState& state, const PartitionABCD& p,
                                InvariantKind kind) {
  if (!p.b.disjoint_with(p.c) || !p.b.disjoint_with(p.d) || !p.c.disjoint_with(p.d)) {
    throw std::invalid_argument("tee_combination: partition regions overlap");
  }
  InvariantReport rep;
  rep.kind = kind;
  Region bc = p.b | p.c;
  Region cd = p.c | p.d;
  rep.s_bc = entropy_restricted_rank(state, bc);
  rep.s_cd = entropy_restricted_rank(state, cd);
  rep.s_b = entropy_restricted_rank(state, p.b);
  rep.s_d = entropy_restricted_rank(state, p.d);
  rep.value_bits = rep.s_bc + rep.s_cd - rep.s_b - rep.s_d;
  const CodeLattice& lat = *state.lattice;
  rep.area_b = area_report(lat, p.b);
  rep.area_c = area_report(lat, p.c);
  rep.area_d = area_report(lat, p.d);
  rep.area_bc = area_report(lat, bc);
  rep.area_cd = area_report(lat, cd);
  return rep;
}

InvariantReport gamma_point(const StabilizerState& state,
                            const PointPartitionParams& params) {
  PartitionABCD p = partition_point(*state.lattice, params);
  return tee_combination(state, p, InvariantKind::GammaPoint);
}

InvariantReport gamma_line(const StabilizerState& state,
                           const LinePartitionParams& params) {
  PartitionABCD p = partition_line(*state.lattice, params);
  return tee_combination(state, p, InvariantKind::GammaLine);
}

InvariantReport gamma_2d(const StabilizerState& state,
                         const TwoDPartitionParams& params) {
  PartitionABCD p = partition_2d(*state.lattice, params);
  return tee_combination(state, p, InvariantKind::Gamma2D);
}

}  // namespace tcent
