#include <doctest.h>

#include <generica/determinantal.hpp>

#include "test_util.hpp"

using namespace generica;

TEST_CASE("minor enumeration") {
  auto [R, phi] = generic_matrix_ring(MatrixShape::generic(2, 2));
  auto m2 = minors(R, phi, 2);
  REQUIRE(m2.size() == 1);
  // x11*x22 - x12*x21
  Polynomial want = poly_sub(ring_mul(R, R.var(0), R.var(3)), ring_mul(R, R.var(1), R.var(2)),
                             R.order);
  CHECK(m2[0] == want);

  auto [R23, phi23] = generic_matrix_ring(MatrixShape::generic(2, 3));
  CHECK(minors(R23, phi23, 2).size() == 3);  // C(2,2)*C(3,2)
  CHECK(minors(R23, phi23, 1).size() == 6);  // all entries
  CHECK_THROWS_AS(minors(R23, phi23, 3), dimension_error);
}

TEST_CASE("det_ideal: full, block, zero row") {
  auto [R, phi] = generic_matrix_ring(MatrixShape::generic(2, 3));
  Ideal I2 = det_ideal(R, phi, 2);
  CHECK(height(I2).height == 2);  // (m-j)(n-j) with j=1

  Ideal block = det_ideal(R, phi, 2, {}, {0, 1});  // first two columns: principal
  CHECK(block.gens().size() == 1);
  CHECK(height(block).height == 1);

  PolyMatrix zr = phi;
  for (int j = 0; j < 3; ++j) zr.at(1, j) = poly_zero();
  Ideal zero_ideal = det_ideal(R, zr, 2);
  CHECK(zero_ideal.is_zero_in_ring());

  CHECK_THROWS_AS(det_ideal(R, phi, 2, std::vector<int>{}, std::vector<int>{5}), dimension_error);
}

TEST_CASE("expected height tables") {
  CHECK(expected_height(MatrixShape::generic(2, 3), 1) == 2);
  CHECK(expected_height(MatrixShape::symmetric(3), 1) == 3);
  CHECK(expected_height(MatrixShape::skew(4), 2) == 1);  // even case C(2,2)
  CHECK_THROWS_AS(expected_height(MatrixShape::generic(2, 3), 3), dimension_error);
}

TEST_CASE("det_profile: generic 2x2 matches on every level") {
  auto [R, phi] = generic_matrix_ring(MatrixShape::generic(2, 2));
  DetProfile p = det_profile(R, phi, MatrixShape::generic(2, 2));
  REQUIRE(p.rows.size() == 2);
  CHECK(p.rows[0].computed_height == 4);
  CHECK(p.rows[1].computed_height == 1);
  CHECK(p.all_match);
}

TEST_CASE("det_profile: specialized but still generic enough") {
  // x22 -> x11: det = x11^2 - x12*x21 still has height 1
  RingCtx R = RingCtx::polynomial(gf(32003), {"x11", "x12", "x21"});
  PolyMatrix phi(2, 2);
  phi.at(0, 0) = R.var(0);
  phi.at(0, 1) = R.var(1);
  phi.at(1, 0) = R.var(2);
  phi.at(1, 1) = R.var(0);
  DetProfile p = det_profile(R, phi, MatrixShape::generic(2, 2));
  CHECK(p.rows[1].computed_height == 1);
  CHECK(p.rows[1].matches);
  CHECK(p.rows[0].matches);  // I_1 = m has height 3 = min(4, 3)
}

TEST_CASE("det_profile: equal rows mismatch recorded") {
  auto [R, phi] = generic_matrix_ring(MatrixShape::generic(2, 2));
  PolyMatrix degen = phi;
  degen.at(1, 0) = phi.at(0, 0);
  degen.at(1, 1) = phi.at(0, 1);
  DetProfile p = det_profile(R, degen, MatrixShape::generic(2, 2));
  CHECK(p.rows[1].computed_height == 0);  // I_2 = 0
  CHECK_FALSE(p.rows[1].matches);
  CHECK_FALSE(p.all_match);
}

TEST_CASE("blockwise monotonicity: I_r(block) inside I_r(full)") {
  auto [R, phi] = generic_matrix_ring(MatrixShape::generic(2, 3));
  Ideal full = det_ideal(R, phi, 2);
  for (auto cols : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}) {
    Ideal blk = det_ideal(R, phi, 2, {}, cols);
    for (const auto& g : blk.gens()) CHECK(full.contains(g));
  }
}

TEST_CASE("injectivity criterion") {
  RingCtx R1 = RingCtx::polynomial(gf(32003), {"x"});
  PolyMatrix m1(1, 1);
  m1.at(0, 0) = R1.var(0);
  CHECK(injectivity_check(R1, m1));

  RingCtx R = tu::ring_xy();
  RingCtx Q = make_quotient(R, {ring_mul(R, R.var(0), R.var(1))});  // k[x,y]/(xy)
  PolyMatrix mq(1, 1);
  mq.at(0, 0) = Q.var(0);
  CHECK_FALSE(injectivity_check(Q, mq));  // x*y = 0

  auto [Rg, phi] = generic_matrix_ring(MatrixShape::generic(2, 2));
  CHECK(injectivity_check(Rg, phi));  // det nonzero in a domain

  PolyMatrix wide(1, 2);
  CHECK_THROWS_AS(injectivity_check(R1, wide), dimension_error);
}

TEST_CASE("full expected-height tables for every implemented shape") {
  std::vector<MatrixShape> shapes = {
      MatrixShape::generic(2, 2), MatrixShape::generic(2, 3), MatrixShape::generic(2, 4),
      MatrixShape::generic(3, 3), MatrixShape::generic(3, 4), MatrixShape::generic(4, 4),
      MatrixShape::symmetric(2),  MatrixShape::symmetric(3),  MatrixShape::skew(2),
      MatrixShape::skew(3),       MatrixShape::skew(4)};
  for (const auto& s : shapes) {
    auto [R, phi] = generic_matrix_ring(s);
    for (int j = 0; j < std::min(s.m, s.n); ++j) {
      Ideal I(R, minors(R, phi, j + 1));
      int h = I.is_zero_in_ring() ? 0 : height(I).height;
      CHECK(h == expected_height(s, j));
    }
  }
}

TEST_CASE("injectivity flips over the quotient by the determinant") {
  auto [R, phi] = generic_matrix_ring(MatrixShape::generic(2, 2));
  CHECK(injectivity_check(R, phi));
  Polynomial det = minors(R, phi, 2)[0];
  RingCtx Q = make_quotient(R, {det});
  PolyMatrix phiq = phi;
  for (auto& e : phiq.a) e = ring_nf(Q, e);
  CHECK_FALSE(injectivity_check(Q, phiq));  // det became a zero divisor
}

TEST_CASE("symmetric and skew generic matrices mirror correctly") {
  auto [Rs, sym] = generic_matrix_ring(MatrixShape::symmetric(3));
  CHECK(Rs.nvars() == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(sym.at(i, j) == sym.at(j, i));

  auto [Rk, skew] = generic_matrix_ring(MatrixShape::skew(4));
  CHECK(Rk.nvars() == 6);
  for (int i = 0; i < 4; ++i) {
    CHECK(skew.at(i, i).is_zero());
    for (int j = 0; j < 4; ++j) CHECK(skew.at(i, j) == poly_neg(skew.at(j, i)));
  }
}
