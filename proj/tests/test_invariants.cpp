#include <doctest.h>

#include <memory>

#include "tcent/excitations.hpp"
#include "tcent/invariants.hpp"
#include "testutil.hpp"

using namespace tcent;

namespace {

std::shared_ptr<const CodeLattice> build(const LatticeSpec& spec) {
  return std::make_shared<CodeLattice>(build_toric_code(spec));
}

StabilizerState boundary_state(Boundary lo, Boundary hi = Boundary::Smooth) {
  return fix_ground_state(build(test::slab3(8, lo, hi)));
}

}  // namespace

TEST_CASE("product state zeroes every combination") {
  auto lat = build(test::slab3(8, Boundary::Smooth, Boundary::Smooth));
  StabilizerState prod;
  prod.lattice = lat;
  for (std::size_t q = 0; q < lat->n_qubits(); ++q) {
    prod.generators.push_back(PauliWord::single_z(lat->n_qubits(), q));
  }
  prod.stabilizer_rank = lat->n_qubits();
  auto p = partition_point(*lat, PointPartitionParams{});
  auto rep = tee_combination(prod, p, InvariantKind::GammaPoint);
  CHECK(rep.value_bits == 0);
  CHECK(rep.s_bc == 0);
}

TEST_CASE("boundary invariant table") {
  SUBCASE("smooth face") {
    auto st = boundary_state(Boundary::Smooth);
    CHECK(gamma_point(st, PointPartitionParams{}).value_bits == 1);
    CHECK(gamma_line(st, LinePartitionParams{}).value_bits == 0);
  }
  SUBCASE("rough face") {
    auto st = boundary_state(Boundary::Rough);
    CHECK(gamma_point(st, PointPartitionParams{}).value_bits == 0);
    CHECK(gamma_line(st, LinePartitionParams{}).value_bits == 1);
  }
  SUBCASE("high face works through the reflected frame") {
    auto st = boundary_state(Boundary::Smooth, Boundary::Rough);
    PointPartitionParams pp;
    pp.face = Face::ZHigh;
    CHECK(gamma_point(st, pp).value_bits == 0);
    LinePartitionParams lp;
    lp.face = Face::ZHigh;
    CHECK(gamma_line(st, lp).value_bits == 1);
    pp.face = Face::ZLow;
    lp.face = Face::ZLow;
    CHECK(gamma_point(st, pp).value_bits == 1);
    CHECK(gamma_line(st, lp).value_bits == 0);
  }
}

TEST_CASE("uniform one-cell dilation cancels area terms") {
  auto smooth = boundary_state(Boundary::Smooth);
  PointPartitionParams small;
  PointPartitionParams big = small;
  big.width += 1;
  big.height += 1;
  auto a = gamma_point(smooth, small);
  auto b = gamma_point(smooth, big);
  CHECK(a.value_bits == b.value_bits);
  CHECK(a.s_bc != b.s_bc);  // the raw entropies do move; only the combination is pinned
}

TEST_CASE("invariants are stable across partition-size sweeps") {
  auto smooth = boundary_state(Boundary::Smooth);
  auto rough = boundary_state(Boundary::Rough);

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
    p = {};
    p.width = 4;
    p.height = 3;
    point_sweep.push_back(p);
  }
  for (const auto& prm : point_sweep) {
    CHECK(gamma_point(smooth, prm).value_bits == 1);
    CHECK(gamma_point(rough, prm).value_bits == 0);
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
    p.origin = {2, 3};
    line_sweep.push_back(p);
    p = {};
    p.hood = 2;
    p.ring = 2;
    line_sweep.push_back(p);
  }
  for (const auto& prm : line_sweep) {
    CHECK(gamma_line(smooth, prm).value_bits == 0);
    CHECK(gamma_line(rough, prm).value_bits == 1);
  }
}

TEST_CASE("one-cell ring deformation leaves gamma_line fixed") {
  auto rough = boundary_state(Boundary::Rough);
  LinePartitionParams a;
  a.ring = 1;
  LinePartitionParams b = a;
  b.ring = 2;  // D dilates by one cell
  CHECK(gamma_line(rough, a).value_bits == gamma_line(rough, b).value_bits);
}

TEST_CASE("ground-state choice does not move the invariants") {
  for (auto kind : {Boundary::Smooth, Boundary::Rough}) {
    auto lat = build(test::slab3(8, kind, Boundary::Smooth));
    auto st1 = fix_ground_state(lat, CompletionStyle::LowestFirst);
    auto st2 = fix_ground_state(lat, CompletionStyle::Alternate);
    CHECK(gamma_point(st1, PointPartitionParams{}).value_bits ==
          gamma_point(st2, PointPartitionParams{}).value_bits);
    CHECK(gamma_line(st1, LinePartitionParams{}).value_bits ==
          gamma_line(st2, LinePartitionParams{}).value_bits);
  }
}

TEST_CASE("nonnegativity across every tested instance") {
  for (auto lo : {Boundary::Smooth, Boundary::Rough}) {
    auto st = boundary_state(lo);
    CHECK(gamma_point(st, PointPartitionParams{}).value_bits >= 0);
    CHECK(gamma_line(st, LinePartitionParams{}).value_bits >= 0);
  }
}

TEST_CASE("every face orientation yields the same table") {
  // One rough and one smooth instance for each of the six faces.
  for (int axis = 0; axis < 3; ++axis) {
    for (int side = 0; side < 2; ++side) {
      for (auto kind : {Boundary::Smooth, Boundary::Rough}) {
        LatticeSpec spec;
        spec.dimension = 3;
        spec.extents = {8, 8, 8};
        spec.boundary[axis] = {side == 0 ? kind : Boundary::Smooth,
                               side == 0 ? Boundary::Smooth : kind};
        auto lat = build(spec);
        auto st = fix_ground_state(lat);
        Face f = static_cast<Face>(axis * 2 + side);
        CAPTURE(face_name(f));
        PointPartitionParams pp;
        pp.face = f;
        LinePartitionParams lp;
        lp.face = f;
        bool smooth = kind == Boundary::Smooth;
        REQUIRE(gamma_point(st, pp).value_bits == (smooth ? 1 : 0));
        REQUIRE(gamma_line(st, lp).value_bits == (smooth ? 0 : 1));
        REQUIRE(condensation_check(st, f, ExcitationKind::ZString) == !smooth);
        REQUIRE(condensation_check(st, f, ExcitationKind::XMembrane) == smooth);
      }
    }
  }
}

TEST_CASE("condensation correspondence") {
  // gamma_point vanishes exactly where point probes condense; gamma_line
  // vanishes exactly where membrane probes condense.
  auto st = boundary_state(Boundary::Rough, Boundary::Smooth);
  for (Face f : {Face::ZLow, Face::ZHigh}) {
    PointPartitionParams pp;
    pp.face = f;
    LinePartitionParams lp;
    lp.face = f;
    bool point_condenses = condensation_check(st, f, ExcitationKind::ZString);
    bool line_condenses = condensation_check(st, f, ExcitationKind::XMembrane);
    CHECK((gamma_point(st, pp).value_bits == 0) == point_condenses);
    CHECK((gamma_line(st, lp).value_bits == 0) == line_condenses);
  }
}

TEST_CASE("monodromy accompanies a nonzero point invariant") {
  // At a smooth face the point excitation cannot be condensed: its string
  // has norm-2 monodromy with an enclosing membrane while gamma_point = 1.
  auto lat = build(test::slab3(8, Boundary::Smooth, Boundary::Smooth));
  auto st = fix_ground_state(lat);

  std::vector<uint32_t> path;
  for (int w = 0; w < 3; ++w) {
    path.push_back(lat->edge_id({{4, 4, w}, 2}).value());
  }
  auto u = z_string(*lat, path);
  auto sphere = enclosing_membrane(*lat, {4, 4, 3}, {4, 4, 3});
  CHECK(monodromy_norm(st, u.op, sphere.op) == 2.0);
  CHECK(gamma_point(st, PointPartitionParams{}).value_bits == 1);
}
