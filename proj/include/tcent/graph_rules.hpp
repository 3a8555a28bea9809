#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tcent/lattice.hpp"
#include "tcent/region.hpp"

namespace tcent {

/// Restriction graph of a region: vertices are the cut star generators,
/// edges the cut plaquette generators, each incident to the one or two cut
/// stars its restriction anticommutes with (single incidence happens at a
/// rough boundary). Every graph move is mirrored on `gens` as a product
/// substitution, and every harvested ebit corresponds to one extracted
/// anticommuting pair, so soundness is checkable against the rank engine at
/// any intermediate step.
class RestrictionGraph {
public:
  struct Vertex {
    uint32_t gen;  // index into gens()
    std::vector<int32_t> edges;
    bool alive = false;
  };
  struct Edge {
    uint32_t gen;
    std::array<int32_t, 2> ends{-1, -1};  // ends[1] = -1 for a dangling edge
    bool alive = false;
    int arity() const { return ends[1] >= 0 ? 2 : 1; }
  };

  std::vector<Vertex> verts;
  std::vector<Edge> edges;
  int64_t ebits = 0;
  int loops_harvested = 0;
  bool supported = true;
  std::string note;

  const std::vector<PauliWord>& gens() const { return gens_; }
  /// Generator indices still in the working set (everything not harvested).
  std::vector<uint32_t> working_indices() const;

  std::size_t alive_vertex_count() const;
  std::size_t alive_edge_count() const;
  int degree(int32_t v) const;

  // --- primitive moves (used by the rules; each keeps the mirror in sync) ---
  void remove_isolated_vertex(int32_t v);                 // +0
  void harvest_degree_one(int32_t v);                     // +1 ebit
  void substitute_edge_with_product(int32_t e, const std::vector<int32_t>& series);
  void substitute_vertex_with_product(int32_t v, const std::vector<int32_t>& vertices);
  void detach_edge(int32_t e);                            // drop from incidence

  friend RestrictionGraph build_restriction_graph(const CodeLattice& lattice,
                                                  const Region& region,
                                                  int excluded_plane_y);

  /// Assembles a graph directly from parts (rule fixtures). `vertex_gens`
  /// and the edge definitions index into `gens`.
  static RestrictionGraph from_parts(
      std::vector<PauliWord> gens, const std::vector<uint32_t>& vertex_gens,
      const std::vector<std::pair<uint32_t, std::array<int32_t, 2>>>& edge_defs);

private:
  std::vector<PauliWord> gens_;
  std::vector<char> harvested_;

  void check_edge(int32_t e) const;
  void check_vertex(int32_t v) const;
};

RestrictionGraph build_restriction_graph(const CodeLattice& lattice, const Region& region,
                                         int excluded_plane_y);

/// Circuit rule: remove `remove_edge` from a circuit (closed series of two-ended
/// edges); entanglement unchanged. Throws std::invalid_argument if the edge
/// list is not a circuit.
void apply_circuit_rule(RestrictionGraph& g, const std::vector<int32_t>& circuit,
                        int32_t remove_edge);

/// Loose-end rule: harvest a loose end (series whose first vertex has a single
/// incident edge and whose interior vertices have exactly two); adds one
/// ebit per edge and removes the series' edges and leading vertices.
void apply_loose_end_rule(RestrictionGraph& g, const std::vector<int32_t>& series);

/// Loop rule: harvest a loop of length x (closed series, every vertex of
/// degree two); adds x - 1 ebits and removes the loop.
void apply_loop_rule(RestrictionGraph& g, const std::vector<int32_t>& loop);

/// Extended-circuit rule: remove one edge from an extended circuit (series whose two
/// terminal edges are dangling); entanglement unchanged.
void apply_extended_circuit_rule(RestrictionGraph& g, const std::vector<int32_t>& series,
                                 int32_t remove_edge);

struct ReduceOptions {
  std::optional<uint64_t> seed;  // randomized rule order when set
  std::function<void(const RestrictionGraph&, const char* rule)> on_step;
};

struct ReduceResult {
  int64_t ebits = 0;
  bool complete = false;  // residual empty
  int loops_harvested = 0;
  std::size_t residual_vertices = 0;
  std::size_t residual_edges = 0;
  std::string note;
};

/// Applies the rules to exhaustion: collapse parallel edges, harvest loose
/// ends and loops, break circuits and extended circuits. The ebit total is
/// order-independent; `seed` randomizes the application order.
ReduceResult reduce(RestrictionGraph g, const ReduceOptions& opts = {});

/// Convenience: build and reduce, returning the region entropy in bits.
ReduceResult graph_entropy(const CodeLattice& lattice, const Region& region,
                           int excluded_plane_y, const ReduceOptions& opts = {});

}  // namespace tcent
