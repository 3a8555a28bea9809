#include <doctest.h>

#include <memory>
#include <random>

#include "tcent/bitmatrix.hpp"
#include "tcent/entropy.hpp"
#include "tcent/lattice.hpp"
#include "testutil.hpp"

using namespace tcent;

namespace {

std::shared_ptr<const CodeLattice> build(const LatticeSpec& spec) {
  return std::make_shared<CodeLattice>(build_toric_code(spec));
}

}  // namespace

TEST_CASE("spec validation") {
  LatticeSpec bad = test::torus3(2);
  bad.boundary[0] = {Boundary::Periodic, Boundary::Smooth};
  CHECK_THROWS_AS(build_toric_code(bad), std::invalid_argument);
  LatticeSpec tiny = test::torus3(1);
  CHECK_THROWS_AS(build_toric_code(tiny), std::invalid_argument);
  LatticeSpec baddim = test::torus3(2);
  baddim.dimension = 4;
  CHECK_THROWS_AS(build_toric_code(baddim), std::invalid_argument);
}

TEST_CASE("3-torus L=2 counts and rank") {
  auto lat = build(test::torus3(2));
  CHECK(lat->n_qubits() == 24);
  CHECK(lat->stars().size() == 8);
  CHECK(lat->plaquettes().size() == 24);
  auto gens = lat->all_generators();
  CHECK(check_matrix(gens).rank() == 21);  // 3 logical qubits
}

TEST_CASE("2D torus L=2 counts and rank") {
  auto lat = build(test::torus2(2));
  CHECK(lat->n_qubits() == 8);
  CHECK(lat->stars().size() == 4);
  CHECK(lat->plaquettes().size() == 4);
  auto gens = lat->all_generators();
  CHECK(check_matrix(gens).rank() == 6);  // 2 logical qubits
}

TEST_CASE("all generator pairs commute across boundary types") {
  std::vector<LatticeSpec> specs = {
      test::torus3(2),
      test::torus2(3),
      test::slab3(3, Boundary::Smooth, Boundary::Smooth),
      test::slab3(3, Boundary::Rough, Boundary::Rough),
      test::slab3(3, Boundary::Rough, Boundary::Smooth),
  };
  LatticeSpec mixed;
  mixed.dimension = 3;
  mixed.extents = {3, 3, 3};
  mixed.boundary = {{{Boundary::Rough, Boundary::Smooth},
                     {Boundary::Smooth, Boundary::Smooth},
                     {Boundary::Rough, Boundary::Rough}}};
  specs.push_back(mixed);
  LatticeSpec plane2d = test::torus2(3);
  plane2d.boundary[0] = {Boundary::Rough, Boundary::Rough};
  plane2d.boundary[1] = {Boundary::Smooth, Boundary::Smooth};
  specs.push_back(plane2d);

  for (const auto& spec : specs) {
    auto lat = build(spec);
    auto gens = lat->all_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        REQUIRE(symplectic_product(gens[i], gens[j]) == 0);
      }
    }
    for (const auto& g : gens) {
      REQUIRE(g.weight() >= 2);
    }
  }
}

TEST_CASE("Z-rows of the six faces of one cube have rank 5") {
  auto lat = build(test::torus3(2));
  // The six plaquettes of the cube at the origin.
  std::vector<PauliWord> faces;
  for (const auto& p : lat->plaquettes()) {
    bool at_origin = false;
    if (p.plane == 0) {  // xy face; cube faces at z=0 and z=1
      at_origin = p.corner[0] == 0 && p.corner[1] == 0 &&
                  (p.corner[2] == 0 || p.corner[2] == 1);
    } else if (p.plane == 1) {  // xz face; cube faces at y=0 and y=1
      at_origin = p.corner[0] == 0 && p.corner[2] == 0 &&
                  (p.corner[1] == 0 || p.corner[1] == 1);
    } else {  // yz face; cube faces at x=0 and x=1
      at_origin = p.corner[1] == 0 && p.corner[2] == 0 &&
                  (p.corner[0] == 0 || p.corner[0] == 1);
    }
    if (at_origin) faces.push_back(p.op);
  }
  REQUIRE(faces.size() == 6);
  PauliWord prod(lat->n_qubits());
  for (const auto& f : faces) prod *= f;
  CHECK(prod.is_identity());  // the product of a cube's faces is identity
  CHECK(check_matrix(faces).rank() == 5);
}

TEST_CASE("smooth slab edge and generator structure") {
  auto lat = build(test::slab3(2, Boundary::Smooth, Boundary::Smooth));
  // Open axis carries L+1 vertex planes; all tangential edges survive.
  CHECK(lat->vertex_counts() == std::array<int, 3>{2, 2, 3});
  // z-edges: 2*2*2; x and y edges: 2*2*3 each.
  CHECK(lat->n_qubits() == 8 + 12 + 12);
  for (uint32_t e = 0; e < lat->n_qubits(); ++e) {
    CHECK_FALSE(lat->is_rough_dangling(e));
  }
}

TEST_CASE("rough slab drops tangential boundary edges and flags dangling") {
  auto lat = build(test::slab3(2, Boundary::Rough, Boundary::Rough));
  // Tangential edges at z=0 and z=2 are gone: x/y edges only at z=1.
  CHECK(lat->n_qubits() == 8 + 4 + 4);
  int dangling = 0;
  for (uint32_t e = 0; e < lat->n_qubits(); ++e) {
    if (lat->is_rough_dangling(e)) ++dangling;
  }
  CHECK(dangling == 8);  // every z-edge touches one of the two rough faces
  // No stars at the rough planes.
  for (const auto& s : lat->stars()) {
    CHECK(s.vertex[2] == 1);
  }
  // Boundary plaquettes truncated to weight 3, kept.
  int w3 = 0;
  for (const auto& p : lat->plaquettes()) {
    if (p.op.weight() == 3) {
      ++w3;
      CHECK(p.rough_truncated);
    }
  }
  CHECK(w3 > 0);
}

TEST_CASE("fix_ground_state completes to full rank") {
  SUBCASE("3-torus has 3 logicals") {
    auto lat = build(test::torus3(2));
    auto st = fix_ground_state(lat);
    CHECK(st.generators.size() == 24);
    CHECK(st.logical_count == 3);
    CHECK(check_matrix(st.generators).rank() == 24);
  }
  SUBCASE("2D torus has 2 logicals") {
    auto lat = build(test::torus2(2));
    auto st = fix_ground_state(lat);
    CHECK(st.logical_count == 2);
    CHECK(check_matrix(st.generators).rank() == 8);
  }
  SUBCASE("slab with two rough faces has 1 logical") {
    auto lat = build(test::slab3(3, Boundary::Rough, Boundary::Rough));
    auto st = fix_ground_state(lat);
    CHECK(st.logical_count == 1);
    CHECK(check_matrix(st.generators).rank() == lat->n_qubits());
  }
  SUBCASE("all-smooth planar 3D patch has no logicals") {
    LatticeSpec spec;
    spec.dimension = 3;
    spec.extents = {2, 2, 2};
    for (int a = 0; a < 3; ++a) spec.boundary[a] = {Boundary::Smooth, Boundary::Smooth};
    auto lat = build(spec);
    auto st = fix_ground_state(lat);
    CHECK(st.logical_count == 0);
  }
  SUBCASE("planar patch with two opposite rough faces has 1 logical") {
    LatticeSpec spec;
    spec.dimension = 3;
    spec.extents = {3, 3, 3};
    for (int a = 0; a < 2; ++a) spec.boundary[a] = {Boundary::Smooth, Boundary::Smooth};
    spec.boundary[2] = {Boundary::Rough, Boundary::Rough};
    auto lat = build(spec);
    auto st = fix_ground_state(lat);
    CHECK(st.logical_count == 1);
    CHECK(check_matrix(st.generators).rank() == lat->n_qubits());
  }
}

TEST_CASE("generators of a full-rank state pairwise commute") {
  for (auto style : {CompletionStyle::LowestFirst, CompletionStyle::Alternate}) {
    auto lat = build(test::slab3(2, Boundary::Rough, Boundary::Smooth));
    auto st = fix_ground_state(lat, style);
    for (std::size_t i = 0; i < st.generators.size(); ++i) {
      for (std::size_t j = i + 1; j < st.generators.size(); ++j) {
        REQUIRE(symplectic_product(st.generators[i], st.generators[j]) == 0);
      }
    }
  }
}

TEST_CASE("independent generating set spans the full group") {
  auto lat = build(test::torus3(3));
  auto sel = independent_generating_set(*lat, 0);
  // Plaquette count: all xy and yz planes plus one fixed-y sheet of xz.
  std::size_t n_star_sel = 0;
  for (const auto& g : sel) {
    if (g.is_x_type() && !g.is_z_type()) ++n_star_sel;
  }
  std::size_t n_plaq_sel = sel.size() - n_star_sel;
  CHECK(n_plaq_sel == 2 * 27 + 9);  // 2L^3 + L^2 at L=3
  auto full = lat->all_generators();
  CHECK(check_matrix(sel).rank() == check_matrix(full).rank());
}

TEST_CASE("edge indexing is frozen row-major with axis fastest") {
  auto lat = build(test::torus3(2));
  // First edges at the origin vertex: axes 0,1,2 in order.
  CHECK(lat->edge_coord(0).v == std::array<int, 3>{0, 0, 0});
  CHECK(lat->edge_coord(0).axis == 0);
  CHECK(lat->edge_coord(1).axis == 1);
  CHECK(lat->edge_coord(2).axis == 2);
  CHECK(lat->edge_coord(3).v == std::array<int, 3>{0, 0, 1});
  // Wrapping lookups hit the canonical edge.
  auto id = lat->edge_id({{2, 0, 0}, 0});
  REQUIRE(id.has_value());
  CHECK(*id == lat->edge_id({{0, 0, 0}, 0}).value());
}
