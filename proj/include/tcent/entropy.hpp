#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tcent/lattice.hpp"
#include "tcent/region.hpp"

namespace tcent {

enum class EntropyMethod { RestrictedRank, FattalPairs };

const char* entropy_method_name(EntropyMethod m);

struct EntropyReport {
  std::string region_id;
  int64_t entropy_bits = 0;
  EntropyMethod method = EntropyMethod::RestrictedRank;
  std::optional<AreaReport> predicted;  // area - N prediction data, if requested
};

/// S(A) = |A| - log2|S_A|, with log2|S_A| = n - rank of the generators
/// restricted to the complement of the region. Exact integer.
int64_t entropy_restricted_rank(const StabilizerState& state, const Region& region);

/// Symplectic Gram-Schmidt over the restricted generators: counts the
/// anticommuting pairs of the canonical form. Pivots are taken lowest
/// generator index first.
int64_t entropy_fattal(const StabilizerState& state, const Region& region);

int64_t entropy(const StabilizerState& state, const Region& region, EntropyMethod m);

EntropyReport entropy_report(const StabilizerState& state, const Region& region,
                             EntropyMethod m, std::string region_id = {},
                             bool with_prediction = false);

/// I(A:B) = S(A) + S(B) - S(AB); regions must be disjoint.
int64_t mutual_info(const StabilizerState& state, const Region& a, const Region& b);

/// I(A:C|B) = S(AB) + S(BC) - S(B) - S(ABC); regions must be disjoint.
int64_t cond_mutual_info(const StabilizerState& state, const Region& a, const Region& b,
                         const Region& c);

}  // namespace tcent
