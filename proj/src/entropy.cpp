#include "tcent/entropy.hpp"

#include <stdexcept>

#include "tcent/bitmatrix.hpp"

namespace tcent {

const char* entropy_method_name(EntropyMethod m) {
  return m == EntropyMethod::RestrictedRank ? "restricted-rank" : "fattal-pairs";
}

int64_t entropy_restricted_rank(const StabilizerState& state, const Region& region) {
  const std::size_t n = state.n_qubits();
  if (region.n_qubits() != n) {
    throw std::invalid_argument("region does not belong to the state's lattice");
  }
  if (state.generators.size() != n) {
    throw std::invalid_argument("state must carry a full-rank generator set");
  }
  std::size_t r = region.size();
  if (r == 0 || r == n) return 0;
  Region comp = region.complement();
  BitMatrix m = check_matrix(state.generators, comp.mask());
  std::size_t rank = m.rank();
  return static_cast<int64_t>(r) - static_cast<int64_t>(n - rank);
}

int64_t entropy_fattal(const StabilizerState& state, const Region& region) {
  const std::size_t n = state.n_qubits();
  if (region.n_qubits() != n) {
    throw std::invalid_argument("region does not belong to the state's lattice");
  }
  if (state.generators.size() != n) {
    throw std::invalid_argument("state must carry a full-rank generator set");
  }
  Region comp = region.complement();

  // Only generators cut by the region can anticommute after restriction;
  // fully-inside and fully-outside restrictions commute with everything.
  std::vector<PauliWord> restr;
  restr.reserve(64);
  for (const auto& g : state.generators) {
    if (g.intersects(region.mask()) && g.intersects(comp.mask())) {
      restr.push_back(g.restricted(region.mask()));
    }
  }
  const std::size_t m = restr.size();
  if (m == 0) return 0;

  // Anticommutation Gram matrix of the restrictions.
  BitMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (symplectic_product(restr[i], restr[j])) {
        gram.set(i, j, true);
        gram.set(j, i, true);
      }
    }
  }

  // Extract anticommuting pairs (i, j), normalizing everything else to
  // commute with both. Multiplying r_l by r_j (when <r_l, r_i> = 1) and by
  // r_i (when <r_l, r_j> = 1) is a pure row update on the Gram matrix.
  std::vector<char> alive(m, 1);
  std::vector<uint64_t> row_i_copy(gram.words_per_row());
  std::vector<uint64_t> row_j_copy(gram.words_per_row());
  int64_t k = 0;
  while (true) {
    std::size_t pi = m, pj = m;
    for (std::size_t i = 0; i < m && pi == m; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (alive[j] && gram.bit(i, j)) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == m) break;
    ++k;
    auto ri = gram.row(pi);
    auto rj = gram.row(pj);
    std::copy(ri.begin(), ri.end(), row_i_copy.begin());
    std::copy(rj.begin(), rj.end(), row_j_copy.begin());
    for (std::size_t l = 0; l < m; ++l) {
      if (!alive[l] || l == pi || l == pj) continue;
      bool anti_i = gram.bit(l, pi);
      bool anti_j = gram.bit(l, pj);
      if (!anti_i && !anti_j) continue;
      auto rl = gram.row(l);
      for (std::size_t w = 0; w < rl.size(); ++w) {
        if (anti_i) rl[w] ^= row_j_copy[w];
        if (anti_j) rl[w] ^= row_i_copy[w];
      }
    }
    alive[pi] = 0;
    alive[pj] = 0;
  }
  return k;
}

int64_t entropy(const StabilizerState& state, const Region& region, EntropyMethod m) {
  return m == EntropyMethod::RestrictedRank ? entropy_restricted_rank(state, region)
                                            : entropy_fattal(state, region);
}

EntropyReport entropy_report(const StabilizerState& state, const Region& region,
                             EntropyMethod m, std::string region_id,
                             bool with_prediction) {
  EntropyReport rep;
  rep.region_id = region_id.empty() ? region.provenance() : std::move(region_id);
  rep.method = m;
  rep.entropy_bits = entropy(state, region, m);
  if (with_prediction) {
    if (!state.lattice) {
      throw std::invalid_argument("surface prediction requires a lattice-backed state");
    }
    rep.predicted = area_report(*state.lattice, region);
  }
  return rep;
}

namespace {

void require_disjoint(const Region& a, const Region& b, const char* what) {
  if (!a.disjoint_with(b)) {
    throw std::invalid_argument(std::string("regions must be disjoint: ") + what);
  }
}

}  // namespace

int64_t mutual_info(const StabilizerState& state, const Region& a, const Region& b) {
  require_disjoint(a, b, "mutual_info");
  return entropy_restricted_rank(state, a) + entropy_restricted_rank(state, b) -
         entropy_restricted_rank(state, a | b);
}

int64_t cond_mutual_info(const StabilizerState& state, const Region& a, const Region& b,
                         const Region& c) {
  require_disjoint(a, b, "cond_mutual_info");
  require_disjoint(b, c, "cond_mutual_info");
  require_disjoint(a, c, "cond_mutual_info");
  Region ab = a | b;
  Region bc = b | c;
  Region abc = ab | c;
  return entropy_restricted_rank(state, ab) + entropy_restricted_rank(state, bc) -
         entropy_restricted_rank(state, b) - entropy_restricted_rank(state, abc);
}

}  // namespace tcent
