#include <doctest.h>

#include <random>

#include "tcent/bitmatrix.hpp"
#include "tcent/pauli.hpp"
#include "testutil.hpp"

using namespace tcent;

TEST_CASE("single-qubit anticommutation") {
  auto x0 = PauliWord::single_x(4, 0);
  auto z0 = PauliWord::single_z(4, 0);
  CHECK(symplectic_product(x0, z0) == 1);
  CHECK(symplectic_product(x0, x0) == 0);
  CHECK(symplectic_product(x0, PauliWord::single_z(4, 1)) == 0);
}

TEST_CASE("symplectic product rejects mismatched lengths") {
  CHECK_THROWS_AS(symplectic_product(PauliWord::identity(3), PauliWord::identity(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(PauliWord::identity(3) * PauliWord::identity(4),
                  std::invalid_argument);
}

TEST_CASE("multiplication identities and signs") {
  auto x0 = PauliWord::single_x(3, 0);
  auto z0 = PauliWord::single_z(3, 0);
  auto id = PauliWord::identity(3);

  CHECK(x0 * id == x0);
  CHECK(x0 * x0 == id);
  CHECK(z0 * z0 == id);

  // (X0 Z0)^2 = -I per qubit.
  auto xz = x0 * z0;
  CHECK(xz.sign() == 1);
  auto sq = xz * xz;
  CHECK(sq.is_identity_bits());
  CHECK(sq.sign() == -1);
}

TEST_CASE("multiplication is associative, signs included") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 7;
    auto rand_word = [&] {
      PauliWord p(n);
      for (std::size_t q = 0; q < n; ++q) {
        p.set_x(q, rng() & 1);
        p.set_z(q, rng() & 1);
      }
      p.set_sign(rng() & 1 ? 1 : -1);
      return p;
    };
    auto p = rand_word(), q = rand_word(), r = rand_word();
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("commutation sign relation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 6;
    auto rand_word = [&] {
      PauliWord p(n);
      for (std::size_t q = 0; q < n; ++q) {
        p.set_x(q, rng() & 1);
        p.set_z(q, rng() & 1);
      }
      return p;
    };
    auto p = rand_word(), q = rand_word();
    CHECK(symplectic_product(p, q) == symplectic_product(q, p));
    auto pq = p * q;
    auto qp = q * p;
    CHECK(pq.same_bits(qp));
    int expected = symplectic_product(p, q) ? -1 : 1;
    CHECK(pq.sign() * qp.sign() == expected);
  }
}

TEST_CASE("restriction splits a word exactly") {
  std::mt19937_64 rng(13);
  const std::size_t n = 80;  // spans more than one machine word
  for (int trial = 0; trial < 50; ++trial) {
    PauliWord p(n);
    for (std::size_t q = 0; q < n; ++q) {
      p.set_x(q, rng() & 1);
      p.set_z(q, rng() & 1);
    }
    p.set_sign(-1);
    Region r = test::random_region(n, rng);
    PauliWord in = p.restricted(r.mask());
    PauliWord out = p.restricted(r.complement().mask());
    CHECK(in.sign() == 1);
    PauliWord joined = in * out;
    CHECK(joined.same_bits(p));
  }
}

TEST_CASE("restriction to full and empty regions") {
  PauliWord p(5);
  p.set_x(1, true);
  p.set_z(3, true);
  p.set_sign(-1);
  Region full = Region::full(5);
  Region empty(5);
  auto pf = p.restricted(full.mask());
  CHECK(pf.same_bits(p));
  CHECK(pf.sign() == 1);  // restrictions carry no phase
  CHECK(p.restricted(empty.mask()).is_identity());
}

TEST_CASE("rank_gf2 basics") {
  BitMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id.set(i, i, true);
  CHECK(id.rank() == 5);

  BitMatrix dup(2, 4);
  dup.set(0, 1, true);
  dup.set(0, 3, true);
  dup.set(1, 1, true);
  dup.set(1, 3, true);
  CHECK(dup.rank() == 1);
}

TEST_CASE("rank matches span enumeration on random small matrices") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 8;
    std::size_t cols = 1 + rng() % 12;
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() & 1) m.set(r, c, true);
      }
    }
    CHECK(m.rank() == test::brute_force_rank(m));
  }
}

TEST_CASE("left nullspace and solve_left") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 2 + rng() % 6;
    std::size_t cols = 2 + rng() % 10;
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() & 1) m.set(r, c, true);
      }
    }
    // Every nullspace vector kills the rows.
    for (const auto& v : m.left_nullspace()) {
      std::vector<uint64_t> acc(m.words_per_row(), 0);
      for (std::size_t r = 0; r < rows; ++r) {
        if ((v[r / 64] >> (r % 64)) & 1) {
          auto row = m.row(r);
          for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= row[w];
        }
      }
      for (uint64_t w : acc) CHECK(w == 0);
    }
    // A random row combination is reconstructed by solve_left.
    std::vector<uint64_t> target(m.words_per_row(), 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (rng() & 1) {
        auto row = m.row(r);
        for (std::size_t w = 0; w < target.size(); ++w) target[w] ^= row[w];
      }
    }
    auto sol = m.solve_left(target);
    REQUIRE(sol.has_value());
    std::vector<uint64_t> acc(m.words_per_row(), 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (((*sol)[r / 64] >> (r % 64)) & 1) {
        auto row = m.row(r);
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= row[w];
      }
    }
    CHECK(acc == target);
  }
}

TEST_CASE("right nullspace vectors are killed by the matrix") {
  std::mt19937_64 rng(16);
  BitMatrix m(6, 9);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 9; ++c) {
      if (rng() & 1) m.set(r, c, true);
    }
  }
  auto basis = m.right_nullspace();
  CHECK(basis.size() == 9 - m.rank());
  for (const auto& v : basis) {
    for (std::size_t r = 0; r < 6; ++r) {
      int acc = 0;
      for (std::size_t c = 0; c < 9; ++c) {
        if (m.bit(r, c) && ((v[c / 64] >> (c % 64)) & 1)) acc ^= 1;
      }
      CHECK(acc == 0);
    }
  }
}
