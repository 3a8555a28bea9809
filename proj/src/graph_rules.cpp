#include "tcent/graph_rules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tcent/bitmatrix.hpp"

namespace tcent {

std::vector<uint32_t> RestrictionGraph::working_indices() const {
  std::vector<uint32_t> idx;
  for (uint32_t i = 0; i < gens_.size(); ++i) {
    if (!harvested_[i]) idx.push_back(i);
  }
  return idx;
}

std::size_t RestrictionGraph::alive_vertex_count() const {
  std::size_t c = 0;
  for (const auto& v : verts) c += v.alive;
  return c;
}

std::size_t RestrictionGraph::alive_edge_count() const {
  std::size_t c = 0;
  for (const auto& e : edges) c += e.alive;
  return c;
}

int RestrictionGraph::degree(int32_t v) const {
  return static_cast<int>(verts[v].edges.size());
}

void RestrictionGraph::check_vertex(int32_t v) const {
  if (v < 0 || v >= static_cast<int32_t>(verts.size()) || !verts[v].alive) {
    throw std::invalid_argument("rule refers to a dead or unknown vertex");
  }
}

void RestrictionGraph::check_edge(int32_t e) const {
  if (e < 0 || e >= static_cast<int32_t>(edges.size()) || !edges[e].alive) {
    throw std::invalid_argument("rule refers to a dead or unknown edge");
  }
}

void RestrictionGraph::detach_edge(int32_t e) {
  check_edge(e);
  Edge& ed = edges[e];
  for (int32_t end : ed.ends) {
    if (end < 0) continue;
    auto& list = verts[end].edges;
    list.erase(std::remove(list.begin(), list.end(), e), list.end());
  }
  ed.alive = false;
}

void RestrictionGraph::remove_isolated_vertex(int32_t v) {
  check_vertex(v);
  if (!verts[v].edges.empty()) {
    throw std::invalid_argument("vertex is not isolated");
  }
  verts[v].alive = false;  // its generator stays in the working set, inert
}

void RestrictionGraph::harvest_degree_one(int32_t v) {
  check_vertex(v);
  if (verts[v].edges.size() != 1) {
    throw std::invalid_argument("vertex does not have degree one");
  }
  int32_t e = verts[v].edges.front();
  Edge& ed = edges[e];
  int32_t other = ed.ends[0] == v ? ed.ends[1] : ed.ends[0];
  if (other >= 0) {
    // The paired plaquette also anticommutes with the far star; absorb the
    // harvested star into it so the pair leaves cleanly.
    gens_[verts[other].gen] *= gens_[verts[v].gen];
  }
  harvested_[verts[v].gen] = 1;
  harvested_[ed.gen] = 1;
  detach_edge(e);
  verts[v].alive = false;
  ++ebits;
}

void RestrictionGraph::substitute_edge_with_product(int32_t e,
                                                    const std::vector<int32_t>& series) {
  check_edge(e);
  PauliWord prod(gens_[0].n_qubits());
  for (int32_t f : series) {
    check_edge(f);
    prod *= gens_[edges[f].gen];
  }
  gens_[edges[e].gen] = prod;
}

void RestrictionGraph::substitute_vertex_with_product(
    int32_t v, const std::vector<int32_t>& vertices) {
  check_vertex(v);
  PauliWord prod(gens_[0].n_qubits());
  for (int32_t u : vertices) {
    check_vertex(u);
    prod *= gens_[verts[u].gen];
  }
  gens_[verts[v].gen] = prod;
}

RestrictionGraph RestrictionGraph::from_parts(
    std::vector<PauliWord> gens, const std::vector<uint32_t>& vertex_gens,
    const std::vector<std::pair<uint32_t, std::array<int32_t, 2>>>& edge_defs) {
  RestrictionGraph g;
  g.gens_ = std::move(gens);
  g.harvested_.assign(g.gens_.size(), 0);
  for (uint32_t vg : vertex_gens) {
    g.verts.push_back({vg, {}, true});
  }
  for (const auto& [eg, ends] : edge_defs) {
    int32_t id = static_cast<int32_t>(g.edges.size());
    Edge e;
    e.gen = eg;
    e.ends = ends;
    e.alive = true;
    g.edges.push_back(e);
    for (int32_t v : ends) {
      if (v >= 0) g.verts[v].edges.push_back(id);
    }
  }
  return g;
}

namespace {

// Shared endpoint of two edges, or -1.
int32_t shared_vertex(const RestrictionGraph::Edge& a, const RestrictionGraph::Edge& b) {
  for (int32_t u : a.ends) {
    if (u < 0) continue;
    for (int32_t w : b.ends) {
      if (w >= 0 && u == w) return u;
    }
  }
  return -1;
}

// Vertex chain of an open series e_1..e_x; returns x+1 entries, where the
// terminal entries are -1 when the corresponding edge is dangling.
std::vector<int32_t> series_chain(const RestrictionGraph& g,
                                  const std::vector<int32_t>& series) {
  if (series.empty()) throw std::invalid_argument("empty edge series");
  std::vector<int32_t> chain(series.size() + 1, -1);
  for (std::size_t j = 0; j + 1 < series.size(); ++j) {
    int32_t s = shared_vertex(g.edges[series[j]], g.edges[series[j + 1]]);
    if (s < 0) throw std::invalid_argument("edge series is not connected");
    chain[j + 1] = s;
  }
  if (series.size() == 1) {
    const auto& e = g.edges[series[0]];
    chain[0] = e.ends[0];
    chain[1] = e.ends[1];
  } else {
    const auto& first = g.edges[series[0]];
    chain[0] = first.ends[0] == chain[1] ? first.ends[1] : first.ends[0];
    const auto& last = g.edges[series.back()];
    chain[series.size()] =
        last.ends[0] == chain[series.size() - 1] ? last.ends[1] : last.ends[0];
  }
  // Series condition: interior vertices distinct (each in no more than two
  // series edges).
  std::vector<int32_t> interior(chain.begin() + 1, chain.end() - 1);
  std::sort(interior.begin(), interior.end());
  if (std::adjacent_find(interior.begin(), interior.end()) != interior.end()) {
    throw std::invalid_argument("edge sequence is not a series");
  }
  return chain;
}

}  // namespace

void apply_circuit_rule(RestrictionGraph& g, const std::vector<int32_t>& circuit,
                        int32_t remove_edge) {
  if (circuit.size() < 2) throw std::invalid_argument("not a circuit");
  for (int32_t e : circuit) {
    if (e < 0 || e >= static_cast<int32_t>(g.edges.size()) || !g.edges[e].alive ||
        g.edges[e].arity() != 2) {
      throw std::invalid_argument("not a circuit");
    }
  }
  std::vector<int32_t> chain;
  try {
    chain = series_chain(g, circuit);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a circuit");
  }
  if (chain.front() != chain.back() || chain.front() < 0) {
    throw std::invalid_argument("not a circuit");
  }
  if (std::find(circuit.begin(), circuit.end(), remove_edge) == circuit.end()) {
    throw std::invalid_argument("removed edge must belong to the circuit");
  }
  g.substitute_edge_with_product(remove_edge, circuit);
  g.detach_edge(remove_edge);
}

void apply_loose_end_rule(RestrictionGraph& g, const std::vector<int32_t>& series) {
  if (series.empty()) throw std::invalid_argument("not a loose end");
  for (int32_t e : series) {
    if (e < 0 || e >= static_cast<int32_t>(g.edges.size()) || !g.edges[e].alive ||
        g.edges[e].arity() != 2) {
      throw std::invalid_argument("not a loose end");
    }
  }
  std::vector<int32_t> chain;
  try {
    chain = series_chain(g, series);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a loose end");
  }
  if (chain.front() < 0 || g.degree(chain.front()) != 1) {
    throw std::invalid_argument("not a loose end");
  }
  for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
    if (g.degree(chain[j]) != 2) {
      throw std::invalid_argument("not a loose end");
    }
  }
  for (std::size_t j = 0; j < series.size(); ++j) {
    g.harvest_degree_one(chain[j]);
  }
}

void apply_loop_rule(RestrictionGraph& g, const std::vector<int32_t>& loop) {
  if (loop.size() < 2) throw std::invalid_argument("not a loop");
  for (int32_t e : loop) {
    if (e < 0 || e >= static_cast<int32_t>(g.edges.size()) || !g.edges[e].alive ||
        g.edges[e].arity() != 2) {
      throw std::invalid_argument("not a loop");
    }
  }
  std::vector<int32_t> chain;
  try {
    chain = series_chain(g, loop);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a loop");
  }
  if (chain.front() != chain.back() || chain.front() < 0) {
    throw std::invalid_argument("not a loop");
  }
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (g.degree(chain[j]) != 2) {
      throw std::invalid_argument("not a loop");
    }
  }

  // Replace the first star by the product of the loop's stars and the first
  // plaquette by the product of the loop's plaquettes; both turn inert, the
  // last edge keeps only its far endpoint, and the remaining open chain
  // harvests x-1 pairs.
  const int32_t v1 = chain.front();
  const int32_t e1 = loop.front();
  const int32_t ex = loop.back();
  std::vector<int32_t> loop_vertices(chain.begin(), chain.end() - 1);
  g.substitute_vertex_with_product(v1, loop_vertices);
  g.substitute_edge_with_product(e1, loop);
  g.detach_edge(e1);
  auto& exe = g.edges[ex];
  exe.ends = {exe.ends[0] == v1 ? exe.ends[1] : exe.ends[0], -1};
  auto& list = g.verts[v1].edges;
  list.erase(std::remove(list.begin(), list.end(), ex), list.end());
  g.remove_isolated_vertex(v1);
  for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
    g.harvest_degree_one(chain[j]);
  }
  ++g.loops_harvested;
}

void apply_extended_circuit_rule(RestrictionGraph& g, const std::vector<int32_t>& series,
                                 int32_t remove_edge) {
  if (series.size() < 2) throw std::invalid_argument("not an extended circuit");
  for (int32_t e : series) {
    if (e < 0 || e >= static_cast<int32_t>(g.edges.size()) || !g.edges[e].alive) {
      throw std::invalid_argument("not an extended circuit");
    }
  }
  if (g.edges[series.front()].arity() != 1 || g.edges[series.back()].arity() != 1) {
    throw std::invalid_argument("not an extended circuit");
  }
  for (std::size_t j = 1; j + 1 < series.size(); ++j) {
    if (g.edges[series[j]].arity() != 2) {
      throw std::invalid_argument("not an extended circuit");
    }
  }
  std::vector<int32_t> chain;
  try {
    chain = series_chain(g, series);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an extended circuit");
  }
  if (chain.front() != -1 || chain.back() != -1) {
    throw std::invalid_argument("not an extended circuit");
  }
  if (std::find(series.begin(), series.end(), remove_edge) == series.end()) {
    throw std::invalid_argument("removed edge must belong to the extended circuit");
  }
  g.substitute_edge_with_product(remove_edge, series);
  g.detach_edge(remove_edge);
}

RestrictionGraph build_restriction_graph(const CodeLattice& lattice, const Region& region,
                                         int excluded_plane_y) {
  const auto& spec = lattice.spec();
  if (spec.dimension != 3) {
    throw std::invalid_argument("restriction graphs are defined for 3D lattices");
  }
  if (region.n_qubits() != lattice.n_qubits()) {
    throw std::invalid_argument("region does not belong to this lattice");
  }
  RestrictionGraph g;
  Region comp = region.complement();
  auto cut = [&](const PauliWord& op) {
    return op.intersects(region.mask()) && op.intersects(comp.mask());
  };

  // Independent stars (greedy, lowest index) with a map back from lattice ids.
  const std::size_t nw = PauliWord::word_count(lattice.n_qubits());
  GF2Span span(2 * nw);
  std::vector<int32_t> star_gen_of(lattice.stars().size(), -1);
  for (std::size_t s = 0; s < lattice.stars().size(); ++s) {
    const auto& op = lattice.stars()[s].op;
    if (span.add(packed_xz(op))) {
      star_gen_of[s] = static_cast<int32_t>(g.gens_.size());
      g.gens_.push_back(op);
    } else if (cut(op)) {
      g.supported = false;
      g.note = "a dependent star is cut by the region; move the region away "
               "from the dropped star";
    }
  }
  const std::size_t n_star_gens = g.gens_.size();

  // Vertices: cut stars.
  std::vector<int32_t> vertex_of_gen(n_star_gens, -1);
  for (std::size_t s = 0; s < lattice.stars().size(); ++s) {
    int32_t gi = star_gen_of[s];
    if (gi < 0) continue;
    if (cut(lattice.stars()[s].op)) {
      vertex_of_gen[gi] = static_cast<int32_t>(g.verts.size());
      g.verts.push_back({static_cast<uint32_t>(gi), {}, true});
    }
  }

  // Selected plaquettes: all xy and yz planes, xz only at the fixed y-plane.
  for (const auto& p : lattice.plaquettes()) {
    bool selected = p.plane == 0 || p.plane == 2 || p.corner[1] == excluded_plane_y;
    if (!selected) continue;
    uint32_t gi = static_cast<uint32_t>(g.gens_.size());
    g.gens_.push_back(p.op);
    if (!cut(p.op)) continue;
    if (p.plane == 1) {
      g.supported = false;
      g.note = "an xz plaquette of the excluded plane is cut; the plane is "
               "not far from the region";
    }
    // Restricted anticommutation = odd number of shared in-region edges.
    std::map<uint32_t, int> parity;
    for (uint32_t e : p.op.support()) {
      if (!region.contains(e)) continue;
      for (uint32_t s : lattice.stars_on_edge(e)) parity[s] ^= 1;
    }
    std::vector<int32_t> incident;
    for (auto [star, par] : parity) {
      if (!par) continue;
      int32_t sg = star_gen_of[star];
      int32_t v = sg >= 0 ? vertex_of_gen[sg] : -1;
      if (v < 0) {
        g.supported = false;
        g.note = "restricted plaquette anticommutes with a non-vertex star";
        continue;
      }
      incident.push_back(v);
    }
    if (incident.empty()) continue;  // inert cut plaquette
    if (incident.size() > 2) {
      g.supported = false;
      g.note = "a cut plaquette anticommutes with more than two cut stars";
      continue;
    }
    int32_t eid = static_cast<int32_t>(g.edges.size());
    RestrictionGraph::Edge ed;
    ed.gen = gi;
    ed.ends[0] = incident[0];
    ed.ends[1] = incident.size() == 2 ? incident[1] : -1;
    ed.alive = true;
    g.edges.push_back(ed);
    for (int32_t v : incident) g.verts[v].edges.push_back(eid);
  }
  g.harvested_.assign(g.gens_.size(), 0);

  // Parallel two-ended edges collapse through the
  // two-edge circuit rule.
  std::map<std::pair<int32_t, int32_t>, int32_t> seen;
  for (int32_t e = 0; e < static_cast<int32_t>(g.edges.size()); ++e) {
    if (!g.edges[e].alive || g.edges[e].arity() != 2) continue;
    auto key = std::minmax(g.edges[e].ends[0], g.edges[e].ends[1]);
    auto [it, inserted] = seen.try_emplace({key.first, key.second}, e);
    if (!inserted) {
      apply_circuit_rule(g, {it->second, e}, e);
    }
  }
  return g;
}

namespace {

struct CycleSearch {
  std::vector<int32_t> edges;  // the cycle as an edge series
};

// First simple cycle over alive two-ended edges, scanning vertices from
// `order`; returns nullopt in a forest.
std::optional<CycleSearch> find_cycle(const RestrictionGraph& g,
                                      const std::vector<int32_t>& order) {
  std::vector<char> visited(g.verts.size(), 0);
  std::vector<int32_t> parent_edge(g.verts.size(), -1);
  std::vector<int32_t> parent_vertex(g.verts.size(), -1);
  for (int32_t root : order) {
    if (!g.verts[root].alive || visited[root]) continue;
    std::vector<int32_t> stack{root};
    visited[root] = 1;
    while (!stack.empty()) {
      int32_t v = stack.back();
      stack.pop_back();
      for (int32_t e : g.verts[v].edges) {
        const auto& ed = g.edges[e];
        if (ed.arity() != 2 || e == parent_edge[v]) continue;
        int32_t w = ed.ends[0] == v ? ed.ends[1] : ed.ends[0];
        if (!visited[w]) {
          visited[w] = 1;
          parent_edge[w] = e;
          parent_vertex[w] = v;
          stack.push_back(w);
        } else {
          // Back edge: walk both endpoints up to their common ancestor.
          std::vector<int32_t> va, wa;
          std::vector<int32_t> vpath, wpath;
          for (int32_t x = v; x >= 0; x = parent_vertex[x]) va.push_back(x);
          for (int32_t x = w; x >= 0; x = parent_vertex[x]) wa.push_back(x);
          std::vector<char> on_va(g.verts.size(), 0);
          for (int32_t x : va) on_va[x] = 1;
          int32_t meet = -1;
          for (int32_t x : wa) {
            if (on_va[x]) {
              meet = x;
              break;
            }
          }
          if (meet < 0) continue;
          CycleSearch cs;
          for (int32_t x = v; x != meet; x = parent_vertex[x]) {
            cs.edges.push_back(parent_edge[x]);
          }
          std::reverse(cs.edges.begin(), cs.edges.end());
          cs.edges.push_back(e);
          for (int32_t x = w; x != meet; x = parent_vertex[x]) {
            cs.edges.push_back(parent_edge[x]);
          }
          if (cs.edges.size() >= 2) return cs;
        }
      }
    }
  }
  return std::nullopt;
}

// Simple path between two vertices over alive two-ended edges (BFS).
std::optional<std::vector<int32_t>> find_path(const RestrictionGraph& g, int32_t from,
                                              int32_t to) {
  std::vector<int32_t> parent_edge(g.verts.size(), -1);
  std::vector<char> visited(g.verts.size(), 0);
  std::deque<int32_t> queue{from};
  visited[from] = 1;
  while (!queue.empty()) {
    int32_t v = queue.front();
    queue.pop_front();
    if (v == to) {
      std::vector<int32_t> path;
      for (int32_t x = to; x != from;) {
        int32_t e = parent_edge[x];
        path.push_back(e);
        const auto& ed = g.edges[e];
        x = ed.ends[0] == x ? ed.ends[1] : ed.ends[0];
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int32_t e : g.verts[v].edges) {
      const auto& ed = g.edges[e];
      if (ed.arity() != 2) continue;
      int32_t w = ed.ends[0] == v ? ed.ends[1] : ed.ends[0];
      if (visited[w]) continue;
      visited[w] = 1;
      parent_edge[w] = e;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

ReduceResult reduce(RestrictionGraph g, const ReduceOptions& opts) {
  ReduceResult res;
  if (!g.supported) {
    res.note = g.note.empty() ? "unsupported geometry" : g.note;
    res.complete = false;
    res.residual_vertices = g.alive_vertex_count();
    res.residual_edges = g.alive_edge_count();
    return res;
  }
  std::optional<std::mt19937_64> rng;
  if (opts.seed) rng.emplace(*opts.seed);

  auto vertex_order = [&]() {
    std::vector<int32_t> order;
    for (int32_t v = 0; v < static_cast<int32_t>(g.verts.size()); ++v) {
      if (g.verts[v].alive) order.push_back(v);
    }
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    return order;
  };

  auto step = [&](const char* rule) {
    if (opts.on_step) opts.on_step(g, rule);
  };

  enum RuleId { kIsolated, kDegreeOne, kParallel, kLoop, kCircuit, kExtended };
  std::array<RuleId, 6> priority{kIsolated, kDegreeOne, kParallel,
                                 kLoop,     kCircuit,   kExtended};

  while (true) {
    if (rng) std::shuffle(priority.begin(), priority.end(), *rng);
    bool applied = false;
    for (RuleId rule : priority) {
      switch (rule) {
        case kIsolated: {
          for (int32_t v : vertex_order()) {
            if (g.verts[v].edges.empty()) {
              g.remove_isolated_vertex(v);
              step("isolated-vertex");
              applied = true;
              break;
            }
          }
          break;
        }
        case kDegreeOne: {
          for (int32_t v : vertex_order()) {
            if (g.verts[v].edges.size() == 1) {
              g.harvest_degree_one(v);
              step("loose-end");
              applied = true;
              break;
            }
          }
          break;
        }
        case kParallel: {
          // Parallel dangling edges on one vertex: a two-edge extended
          // circuit. Parallel two-ended pairs were collapsed at build time
          // but can reappear after circuit removals elsewhere.
          std::map<std::pair<int32_t, int32_t>, int32_t> seen2;
          std::map<int32_t, int32_t> seen1;
          for (int32_t e = 0; e < static_cast<int32_t>(g.edges.size()) && !applied;
               ++e) {
            if (!g.edges[e].alive) continue;
            if (g.edges[e].arity() == 2) {
              auto key = std::minmax(g.edges[e].ends[0], g.edges[e].ends[1]);
              auto [it, inserted] = seen2.try_emplace({key.first, key.second}, e);
              if (!inserted) {
                apply_circuit_rule(g, {it->second, e}, e);
                step("circuit");
                applied = true;
              }
            } else {
              auto [it, inserted] = seen1.try_emplace(g.edges[e].ends[0], e);
              if (!inserted) {
                apply_extended_circuit_rule(g, {it->second, e}, e);
                step("extended-circuit");
                applied = true;
              }
            }
          }
          break;
        }
        case kLoop: {
          auto cyc = find_cycle(g, vertex_order());
          if (!cyc) break;
          bool pure = true;
          for (int32_t e : cyc->edges) {
            for (int32_t v : g.edges[e].ends) {
              if (v >= 0 && g.degree(v) != 2) pure = false;
            }
          }
          if (pure) {
            apply_loop_rule(g, cyc->edges);
            step("loop");
            applied = true;
          }
          break;
        }
        case kCircuit: {
          auto cyc = find_cycle(g, vertex_order());
          if (!cyc) break;
          bool pure = true;
          for (int32_t e : cyc->edges) {
            for (int32_t v : g.edges[e].ends) {
              if (v >= 0 && g.degree(v) != 2) pure = false;
            }
          }
          if (pure && !rng) break;  // deterministic order leaves loops to the loop rule
          int32_t victim = *std::max_element(cyc->edges.begin(), cyc->edges.end());
          if (rng) {
            victim = cyc->edges[(*rng)() % cyc->edges.size()];
          }
          apply_circuit_rule(g, cyc->edges, victim);
          step("circuit");
          applied = true;
          break;
        }
        case kExtended: {
          std::vector<int32_t> dangling;
          for (int32_t e = 0; e < static_cast<int32_t>(g.edges.size()); ++e) {
            if (g.edges[e].alive && g.edges[e].arity() == 1) dangling.push_back(e);
          }
          if (rng) std::shuffle(dangling.begin(), dangling.end(), *rng);
          for (std::size_t i = 0; i < dangling.size() && !applied; ++i) {
            for (std::size_t j = i + 1; j < dangling.size() && !applied; ++j) {
              int32_t u = g.edges[dangling[i]].ends[0];
              int32_t w = g.edges[dangling[j]].ends[0];
              std::vector<int32_t> series;
              if (u == w) {
                series = {dangling[i], dangling[j]};
              } else {
                auto path = find_path(g, u, w);
                if (!path) continue;
                series.push_back(dangling[i]);
                series.insert(series.end(), path->begin(), path->end());
                series.push_back(dangling[j]);
              }
              int32_t victim = series[series.size() / 2];
              if (rng) victim = series[(*rng)() % series.size()];
              apply_extended_circuit_rule(g, series, victim);
              step("extended-circuit");
              applied = true;
            }
          }
          break;
        }
      }
      if (applied) break;
    }
    if (!applied) break;
  }

  res.ebits = g.ebits;
  res.loops_harvested = g.loops_harvested;
  res.residual_vertices = g.alive_vertex_count();
  res.residual_edges = g.alive_edge_count();
  res.complete = res.residual_vertices == 0 && res.residual_edges == 0;
  if (!res.complete && res.note.empty()) {
    res.note = "irreducible residual graph";
  }
  return res;
}

ReduceResult graph_entropy(const CodeLattice& lattice, const Region& region,
                           int excluded_plane_y, const ReduceOptions& opts) {
  return reduce(build_restriction_graph(lattice, region, excluded_plane_y), opts);
}

}  // namespace tcent
