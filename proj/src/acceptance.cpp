#include "tcent/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <random>

#include <fmt/format.h>

#include "tcent/dense.hpp"
#include "tcent/entropy.hpp"
#include "tcent/excitations.hpp"
#include "tcent/graph_rules.hpp"
#include "tcent/invariants.hpp"
#include "tcent/region.hpp"

namespace tcent::accept {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::shared_ptr<const CodeLattice> make_lattice(int dim, int L, Boundary z_lo,
                                                Boundary z_hi) {
  LatticeSpec spec;
  spec.dimension = dim;
  spec.extents = {L, L, dim == 3 ? L : 1};
  if (z_lo != Boundary::Periodic || z_hi != Boundary::Periodic) {
    spec.boundary[2] = {z_lo, z_hi};
  }
  return std::make_shared<CodeLattice>(build_toric_code(spec));
}

std::shared_ptr<const CodeLattice> torus3(int L) {
  return make_lattice(3, L, Boundary::Periodic, Boundary::Periodic);
}

struct Check {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAIL " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

// Random full-rank commuting set over the real subgroup (H/CX/CZ images of
// the computational-basis group), random signs.
StabilizerState random_state(std::size_t n, std::mt19937_64& rng) {
  std::vector<PauliWord> gens;
  gens.reserve(n);
  for (std::size_t q = 0; q < n; ++q) gens.push_back(PauliWord::single_z(n, q));
  std::uniform_int_distribution<int> gate(0, 2);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  for (std::size_t step = 0; step < 4 * n * n; ++step) {
    std::size_t a = qubit(rng), b = qubit(rng);
    switch (gate(rng)) {
      case 0:
        for (auto& g : gens) {
          bool x = g.x(a), z = g.z(a);
          g.set_x(a, z);
          g.set_z(a, x);
        }
        break;
      case 1:
        if (a != b) {
          for (auto& g : gens) {
            if (g.x(a)) g.set_x(b, !g.x(b));
            if (g.z(b)) g.set_z(a, !g.z(a));
          }
        }
        break;
      default:
        if (a != b) {
          for (auto& g : gens) {
            if (g.x(a)) g.set_z(b, !g.z(b));
            if (g.x(b)) g.set_z(a, !g.z(a));
          }
        }
        break;
    }
  }
  for (auto& g : gens) g.set_sign(rng() & 1 ? 1 : -1);
  StabilizerState st;
  st.generators = std::move(gens);
  st.stabilizer_rank = n;
  return st;
}

Region random_region(std::size_t n, std::mt19937_64& rng) {
  Region r(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() & 1) r.insert(static_cast<uint32_t>(q));
  }
  return r;
}

Eigen::MatrixXcd random_density_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace

CriterionResult bulk_formula() {
  auto t0 = Clock::now();
  Check c;
  auto lat = torus3(8);
  auto st = fix_ground_state(lat);
  for (int side = 2; side <= 4; ++side) {
    Region ball = box_region(*lat, Box{{1, 1, 1},
                                       {1.0 + side, 1.0 + side, 1.0 + side}});
    auto rep = area_report(*lat, ball);
    int64_t expected = rep.area - 1;
    int64_t s_rank = entropy_restricted_rank(st, ball);
    int64_t s_fattal = entropy_fattal(st, ball);
    c.expect(s_rank == expected,
             fmt::format("side {}: rank {} != area-1 {}", side, s_rank, expected));
    c.expect(s_fattal == expected,
             fmt::format("side {}: fattal {} != area-1 {}", side, s_fattal, expected));
    if (side == 2) c.note(fmt::format("side 2: S={} A={}", s_rank, rep.area));
  }
  double secs = elapsed(t0);
  c.expect(secs < 60.0, fmt::format("runtime {:.1f}s exceeds 60s", secs));
  return {1, "bulk formula S = A - 1 (sides 2,3,4; L=8 torus)", c.pass, c.detail, secs};
}

CriterionResult multi_component() {
  auto t0 = Clock::now();
  Check c;
  auto lat = torus3(8);
  auto st = fix_ground_state(lat);
  Region shell =
      annulus_region(*lat, Box{{1, 1, 1}, {7, 7, 7}}, Box{{3, 3, 3}, {5, 5, 5}});
  auto rep = area_report(*lat, shell);
  c.expect(rep.components_total == 2, "shell should have two boundary components");
  int64_t s_rank = entropy_restricted_rank(st, shell);
  int64_t s_fattal = entropy_fattal(st, shell);
  c.expect(s_rank == rep.area - 2,
           fmt::format("rank {} != area-2 {}", s_rank, rep.area - 2));
  c.expect(s_fattal == rep.area - 2, "fattal engine disagrees");
  c.note(fmt::format("S={} A={} n=2", s_rank, rep.area));
  return {2, "hollow shell S = A - 2", c.pass, c.detail, elapsed(t0)};
}

CriterionResult boundary_formula() {
  auto t0 = Clock::now();
  Check c;
  for (auto kind : {Boundary::Smooth, Boundary::Rough}) {
    auto lat = make_lattice(3, 8, kind, Boundary::Smooth);
    auto st = fix_ground_state(lat);
    int64_t offset = kind == Boundary::Smooth ? -1 : 0;
    for (int side = 2; side <= 4; ++side) {
      Region ball = box_region(
          *lat, Box{{2, 2, 0}, {2.0 + side, 2.0 + side, static_cast<double>(side)}});
      auto rep = area_report(*lat, ball);
      int64_t expected = rep.area + offset;
      int64_t s_rank = entropy_restricted_rank(st, ball);
      int64_t s_fattal = entropy_fattal(st, ball);
      const char* name = kind == Boundary::Smooth ? "smooth" : "rough";
      c.expect(s_rank == expected, fmt::format("{} side {}: rank {} != {}", name, side,
                                               s_rank, expected));
      c.expect(s_fattal == expected, fmt::format("{} side {}: fattal mismatch", name, side));
    }
  }
  return {3, "boundary balls: smooth S = A - 1, rough S = A (sides 2,3,4)", c.pass,
          c.detail, elapsed(t0)};
}

CriterionResult invariant_table() {
  auto t0 = Clock::now();
  Check c;

  std::vector<PointPartitionParams> point_sweep;
  {
    PointPartitionParams p;
    point_sweep.push_back(p);
    p.width = 3;
    point_sweep.push_back(p);
    p = {};
    p.height = 3;
    p.wrap = 2;
    point_sweep.push_back(p);
    p = {};
    p.origin = {1, 3};
    point_sweep.push_back(p);
  }
  std::vector<LinePartitionParams> line_sweep;
  {
    LinePartitionParams p;
    line_sweep.push_back(p);
    p.core = 4;
    p.ring = 1;
    line_sweep.push_back(p);
    p = {};
    p.ring_height = 3;
    p.column = 1;
    line_sweep.push_back(p);
    p = {};
    p.hood = 2;
    line_sweep.push_back(p);
  }

  for (auto kind : {Boundary::Smooth, Boundary::Rough}) {
    auto lat = make_lattice(3, 8, kind, Boundary::Smooth);
    auto st = fix_ground_state(lat);
    bool smooth = kind == Boundary::Smooth;
    const char* name = smooth ? "smooth" : "rough";
    int64_t want_point = smooth ? 1 : 0;
    int64_t want_line = smooth ? 0 : 1;
    for (std::size_t i = 0; i < point_sweep.size(); ++i) {
      auto rep = gamma_point(st, point_sweep[i]);
      c.expect(rep.value_bits == want_point,
               fmt::format("{} gamma_point[{}] = {}", name, i, rep.value_bits));
    }
    for (std::size_t i = 0; i < line_sweep.size(); ++i) {
      auto rep = gamma_line(st, line_sweep[i]);
      c.expect(rep.value_bits == want_line,
               fmt::format("{} gamma_line[{}] = {}", name, i, rep.value_bits));
    }

    // N_R component lists for the default partitions.
    auto pp = partition_point(*lat, PointPartitionParams{});
    auto nfree = [&](const Region& r) {
      return area_report(*lat, r).components_rough_free;
    };
    std::array<int64_t, 4> point_n{nfree(pp.b | pp.c), nfree(pp.c | pp.d), nfree(pp.b),
                                   nfree(pp.d)};
    std::array<int64_t, 4> want_point_n =
        smooth ? std::array<int64_t, 4>{1, 1, 1, 2} : std::array<int64_t, 4>{0, 0, 0, 0};
    c.expect(point_n == want_point_n,
             fmt::format("{} point N-list ({},{},{},{})", name, point_n[0], point_n[1],
                         point_n[2], point_n[3]));

    auto lp = partition_line(*lat, LinePartitionParams{});
    std::array<int64_t, 4> line_n{nfree(lp.b | lp.c), nfree(lp.c | lp.d), nfree(lp.b),
                                  nfree(lp.d)};
    std::array<int64_t, 4> want_line_n =
        smooth ? std::array<int64_t, 4>{1, 1, 1, 1} : std::array<int64_t, 4>{0, 0, 1, 0};
    c.expect(line_n == want_line_n,
             fmt::format("{} line N-list ({},{},{},{})", name, line_n[0], line_n[1],
                         line_n[2], line_n[3]));
  }
  c.note("smooth (1,0), rough (0,1) across 4 sweep settings each");
  return {4, "invariant table gamma_point/gamma_line with N_R lists", c.pass, c.detail,
          elapsed(t0)};
}

CriterionResult engine_triangle(uint64_t seed) {
  auto t0 = Clock::now();
  Check c;
  std::mt19937_64 rng(seed);

  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 4 + rng() % 21;  // n <= 24
    auto st = random_state(n, rng);
    Region r = random_region(n, rng);
    if (entropy_fattal(st, r) != entropy_restricted_rank(st, r)) ++mismatches;
  }
  c.expect(mismatches == 0, fmt::format("{} fattal/rank mismatches", mismatches));

  int graph_checked = 0;
  for (int size = 2; size <= 5; ++size) {
    struct Fam {
      std::shared_ptr<const CodeLattice> lat;
      Region region;
    };
    std::vector<Fam> fams;
    {
      auto lat = torus3(8);
      fams.push_back({lat, box_region(*lat, Box{{1, 1, 1},
                                                {1.0 + size, 1.0 + size, 1.0 + size}})});
    }
    for (auto kind : {Boundary::Smooth, Boundary::Rough}) {
      auto lat = make_lattice(3, 8, kind, Boundary::Smooth);
      fams.push_back({lat, box_region(*lat, Box{{2, 2, 0},
                                                {2.0 + size, 2.0 + size,
                                                 static_cast<double>(size)}})});
    }
    for (auto& fam : fams) {
      auto st = fix_ground_state(fam.lat);
      int64_t expected = entropy_restricted_rank(st, fam.region);
      auto base = graph_entropy(*fam.lat, fam.region, 0);
      c.expect(base.complete && base.ebits == expected,
               fmt::format("graph engine off at size {}", size));
      for (uint64_t s = 1; s <= 20; ++s) {
        ReduceOptions opts;
        opts.seed = seed * 1000 + s;
        auto res = graph_entropy(*fam.lat, fam.region, 0, opts);
        if (!(res.complete && res.ebits == expected)) {
          c.expect(false, fmt::format("randomized order {} off at size {}", s, size));
          break;
        }
      }
      ++graph_checked;
    }
  }
  c.note(fmt::format("200 random states; {} family geometries x 20 orders",
                     graph_checked));
  return {5, "engine triangle: fattal = rank = graph reduction", c.pass, c.detail,
          elapsed(t0)};
}

CriterionResult dense_certification(uint64_t seed) {
  auto t0 = Clock::now();
  Check c;
  auto lat = make_lattice(2, 2, Boundary::Periodic, Boundary::Periodic);
  auto st = fix_ground_state(lat);
  auto d = dense_from_stabilizers(st);
  double worst = 0.0;
  for (uint32_t bits = 0; bits < 256; ++bits) {
    Region r(8);
    for (int q = 0; q < 8; ++q) {
      if ((bits >> q) & 1) r.insert(q);
    }
    double dense = dense_entropy(d, r);
    double exact = static_cast<double>(entropy_restricted_rank(st, r));
    worst = std::max(worst, std::abs(dense - exact));
    if (entropy_fattal(st, r) != static_cast<int64_t>(exact)) {
      c.expect(false, fmt::format("fattal off at region {:#x}", bits));
    }
  }
  c.expect(worst < 1e-9, fmt::format("dense deviation {:.2e}", worst));

  std::mt19937_64 rng(seed);
  double worst_sandwich = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 << (rng() % 4);
    auto rho = random_density_matrix(dim, rng);
    auto sigma = random_density_matrix(dim, rng);
    double f = fidelity(rho, sigma);
    double dist = trace_distance(rho, sigma);
    double lo = 1.0 - f;
    double hi = std::sqrt(std::max(0.0, 1.0 - f * f));
    worst_sandwich = std::max(worst_sandwich, lo - dist);
    worst_sandwich = std::max(worst_sandwich, dist - hi);
  }
  c.expect(worst_sandwich < 1e-9,
           fmt::format("sandwich violation {:.2e}", worst_sandwich));
  c.note(fmt::format("256 regions, max |dense-exact| {:.1e}; 100 sandwich pairs",
                     worst));
  return {6, "dense certification on the 8-qubit torus + F/D sandwich", c.pass, c.detail,
          elapsed(t0)};
}

CriterionResult le_ge_inequality(uint64_t seed) {
  (void)seed;
  auto t0 = Clock::now();
  Check c;
  auto lat = make_lattice(2, 2, Boundary::Periodic, Boundary::Periodic);
  auto st = fix_ground_state(lat);
  const std::size_t n = 8;

  auto region_of = [&](std::initializer_list<uint32_t> qs) {
    Region r(n);
    for (uint32_t q : qs) r.insert(q);
    return r;
  };
  Region a = region_of({0, 1});
  Region b = region_of({2, 3});
  Region cc = region_of({4, 5});

  int met = 0, held = 0, unmet = 0;
  double min_slack = 1e300;
  auto run = [&](const StabilizerState& state, const PauliWord& u, const Region& ra,
                 const Region& rb, const Region& rc) {
    auto rep = verify_le_ge(state, u, ra, rb, rc);
    if (!rep.premise_met) {
      ++unmet;
      return;
    }
    ++met;
    if (rep.holds) ++held;
    min_slack = std::min(min_slack, rep.slack);
  };

  // Stabilizer element: sigma = rho.
  run(st, st.generators.front(), a, b, cc);
  // Identity on a product state.
  StabilizerState prod;
  for (std::size_t q = 0; q < n; ++q) {
    prod.generators.push_back(PauliWord::single_z(n, q));
  }
  prod.stabilizer_rank = n;
  run(prod, PauliWord::identity(n), a, b, cc);
  // Open Z-strings supported on D.
  PauliWord z1(n);
  z1.set_z(6, true);
  run(st, z1, a, b, cc);
  PauliWord z2(n);
  z2.set_z(6, true);
  z2.set_z(7, true);
  run(st, z2, a, b, cc);
  // A dual X-wrap acting across A and D: the AB and BC marginals are
  // maximally mixed either way, but the ABC marginal moves.
  {
    auto id0 = lat->edge_id({{0, 0, 0}, 0}).value();
    auto id1 = lat->edge_id({{0, 1, 0}, 0}).value();
    PauliWord xwrap(n);
    xwrap.set_x(id0, true);
    xwrap.set_x(id1, true);
    Region ra = region_of({id0});
    auto other = lat->edge_id({{1, 0, 0}, 0}).value();
    Region rc = region_of({other});
    auto v0 = lat->edge_id({{0, 0, 0}, 1}).value();
    auto v1 = lat->edge_id({{1, 0, 0}, 1}).value();
    Region rb = region_of({v0, v1});
    auto rep = verify_le_ge(st, xwrap, ra, rb, rc);
    if (rep.premise_met) {
      ++met;
      if (rep.holds) ++held;
      min_slack = std::min(min_slack, rep.slack);
      c.expect(rep.lhs > 1e-6, "engineered instance should move the ABC marginal");
    } else {
      c.expect(false, "engineered instance should meet the premise");
    }
  }
  // Premise breaker, reported as unmet rather than as a violation.
  PauliWord bad(n);
  bad.set_x(4, true);
  run(st, bad, a, b, cc);

  c.expect(met >= 5, fmt::format("only {} instances met the premise", met));
  c.expect(held == met, fmt::format("{}/{} premise-met instances held", held, met));
  c.expect(unmet == 1, "premise breaker not classified as unmet");
  c.note(fmt::format("{} met (all held, min slack {:.3f}), {} unmet", met, min_slack,
                     unmet));
  return {7, "local-to-global bound D^2 <= I_rho + I_sigma", c.pass, c.detail,
          elapsed(t0)};
}

CriterionResult excitation_contract() {
  auto t0 = Clock::now();
  Check c;
  auto lat = make_lattice(3, 6, Boundary::Rough, Boundary::Smooth);
  auto st = fix_ground_state(lat);

  c.expect(condensation_check(st, Face::ZLow, ExcitationKind::ZString),
           "rough face should absorb point probes");
  c.expect(!condensation_check(st, Face::ZLow, ExcitationKind::XMembrane),
           "rough face should reject membrane probes");
  c.expect(!condensation_check(st, Face::ZHigh, ExcitationKind::ZString),
           "smooth face should reject point probes");
  c.expect(condensation_check(st, Face::ZHigh, ExcitationKind::XMembrane),
           "smooth face should absorb membrane probes");

  // Monodromy at the smooth boundary: a string whose endpoint is enclosed by
  // a membrane sphere has norm 2 while gamma_point = 1 there.
  {
    auto smooth = make_lattice(3, 8, Boundary::Smooth, Boundary::Smooth);
    auto sst = fix_ground_state(smooth);
    std::vector<uint32_t> path;
    for (int w = 0; w < 3; ++w) path.push_back(smooth->edge_id({{4, 4, w}, 2}).value());
    auto u = z_string(*smooth, path);
    auto sphere = enclosing_membrane(*smooth, {4, 4, 3}, {4, 4, 3});
    double norm = monodromy_norm(sst, u.op, sphere.op);
    auto gp = gamma_point(sst, PointPartitionParams{});
    c.expect(norm == 2.0, fmt::format("monodromy norm {}", norm));
    c.expect(gp.value_bits == 1, "gamma_point(smooth) should be 1 bit");
  }

  // The line-excitation mirror at the rough boundary: a rough-to-rough arc
  // threading the half-open membrane tube has norm 2 while gamma_line = 1.
  {
    auto probe = boundary_probe(*lat, Face::ZLow, ExcitationKind::XMembrane);
    std::vector<uint32_t> arc;
    arc.push_back(lat->edge_id({{3, 3, 0}, 2}).value());
    arc.push_back(lat->edge_id({{3, 3, 1}, 2}).value());
    arc.push_back(lat->edge_id({{3, 3, 2}, 0}).value());
    arc.push_back(lat->edge_id({{4, 3, 2}, 0}).value());
    arc.push_back(lat->edge_id({{5, 3, 1}, 2}).value());
    arc.push_back(lat->edge_id({{5, 3, 0}, 2}).value());
    auto v = z_string(*lat, arc);
    c.expect(syndrome(*lat, v.op).empty(), "threading arc should condense at both ends");
    double norm = monodromy_norm(st, probe.op, v.op);
    c.expect(norm == 2.0, fmt::format("arc/tube monodromy norm {}", norm));
    LinePartitionParams lp;
    lp.ring = 1;
    lp.ring_height = 1;
    lp.column = 1;
    lp.origin = {2, 2};
    auto gl = gamma_line(st, lp);
    c.expect(gl.value_bits == 1, "gamma_line(rough) should be 1 bit");
  }
  c.note("condensation table matches; both monodromy norms exactly 2");
  return {8, "excitation contract: condensation table + monodromy consistency", c.pass,
          c.detail, elapsed(t0)};
}

CriterionResult ssa_suite(uint64_t seed) {
  auto t0 = Clock::now();
  Check c;
  std::mt19937_64 rng(seed);
  struct Lat {
    const char* name;
    std::shared_ptr<const CodeLattice> lat;
  };
  std::vector<Lat> lats = {
      {"2d-torus", make_lattice(2, 4, Boundary::Periodic, Boundary::Periodic)},
      {"3-torus", torus3(3)},
      {"rough-smooth", make_lattice(3, 4, Boundary::Rough, Boundary::Smooth)},
  };
  for (auto& l : lats) {
    auto st = fix_ground_state(l.lat);
    const std::size_t n = l.lat->n_qubits();
    int negative = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Region a(n), b(n), cc(n);
      for (std::size_t q = 0; q < n; ++q) {
        switch (rng() % 4) {
          case 0: a.insert(static_cast<uint32_t>(q)); break;
          case 1: b.insert(static_cast<uint32_t>(q)); break;
          case 2: cc.insert(static_cast<uint32_t>(q)); break;
          default: break;
        }
      }
      if (cond_mutual_info(st, a, b, cc) < 0) ++negative;
    }
    c.expect(negative == 0, fmt::format("{}: {} negative CMI values", l.name, negative));
  }
  c.note("100 random disjoint triples per lattice, 3 lattices");
  return {9, "strong subadditivity: I(A:C|B) >= 0", c.pass, c.detail, elapsed(t0)};
}

std::vector<CriterionResult> run_all(uint64_t seed) {
  std::vector<CriterionResult> rs;
  rs.push_back(bulk_formula());
  rs.push_back(multi_component());
  rs.push_back(boundary_formula());
  rs.push_back(invariant_table());
  rs.push_back(engine_triangle(seed));
  rs.push_back(dense_certification(seed));
  rs.push_back(le_ge_inequality(seed));
  rs.push_back(excitation_contract());
  rs.push_back(ssa_suite(seed));
  return rs;
}

std::string format_line(const CriterionResult& r) {
  return fmt::format("{} {}. {}{}{} [{:.2f}s]", r.pass ? "PASS" : "FAIL", r.index,
                     r.name, r.detail.empty() ? "" : " -- ", r.detail, r.seconds);
}

}  // namespace tcent::accept
