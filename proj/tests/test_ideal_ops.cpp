#include <doctest.h>

#include <generica/ideal_ops.hpp>

#include "test_util.hpp"

using namespace generica;

TEST_CASE("sum and product") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  Ideal Ix(R, {x}), Iy(R, {y}), zero(R, {});

  Ideal sum = ideal_sum(Ix, Iy);
  CHECK(sum.equals(Ideal(R, {x, y})));
  CHECK(ideal_product(Ix, Ix).equals(Ideal(R, {ring_mul(R, x, x)})));
  CHECK(ideal_sum(Ix, zero).equals(Ix));
}

TEST_CASE("intersection examples with membership oracle") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  Ideal Ix(R, {x}), Iy(R, {y}), Ixy(R, {x, y});

  CHECK(ideal_intersect(Ix, Iy).equals(Ideal(R, {ring_mul(R, x, y)})));
  CHECK(ideal_intersect(Ix, Ixy).equals(Ix));  // containment case

  // (x^2, y) ∩ (x) = (x^2, xy): two-sided membership oracle
  Ideal A(R, {ring_mul(R, x, x), y});
  Ideal got = ideal_intersect(A, Ix);
  Ideal want(R, {ring_mul(R, x, x), ring_mul(R, x, y)});
  CHECK(got.equals(want));
  for (const auto& g : want.gens()) {
    CHECK(A.contains(g));
    CHECK(Ix.contains(g));
  }
}

TEST_CASE("colon ideal examples") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);

  CHECK(ideal_quotient(Ideal(R, {ring_mul(R, x, x)}), x).equals(Ideal(R, {x})));
  CHECK(ideal_quotient(Ideal(R, {ring_mul(R, x, y)}), x).equals(Ideal(R, {y})));
  // (x) : y = (x), membership oracle both directions
  Ideal got = ideal_quotient(Ideal(R, {x}), y);
  CHECK(got.equals(Ideal(R, {x})));

  bool flagged = false;
  Ideal unit = ideal_quotient(Ideal(R, {x}), poly_zero(), &flagged);
  CHECK(flagged);
  CHECK(unit.is_unit());
}

TEST_CASE("annihilator of a direct-sum quotient") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  Ideal Ix(R, {x}), Iy(R, {y}), m(R, {x, y});
  Ideal my2(R, {x, ring_mul(R, y, y)});

  CHECK(annihilator_of_quotient({Ix, Iy}).equals(Ideal(R, {ring_mul(R, x, y)})));
  CHECK(annihilator_of_quotient({m}).equals(m));
  CHECK(annihilator_of_quotient({m, my2}).equals(my2));
}

TEST_CASE("power of m") {
  RingCtx R = tu::ring_xy();
  Ideal m2 = power_of_m(R, 2);
  CHECK(m2.gens().size() == 3);  // x^2, xy, y^2
  Polynomial x = R.var(0), y = R.var(1);
  CHECK(m2.contains(ring_mul(R, x, y)));
  CHECK_FALSE(m2.contains(x));
  CHECK(power_of_m(R, 0).is_unit());
}

TEST_CASE("intersection in a quotient ring") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  RingCtx Q = make_quotient(R, {ring_mul(R, x, y)});
  Polynomial qx = Q.var(0), qy = Q.var(1);
  // in k[x,y]/(xy): (x) ∩ (y) = (xy) = 0
  Ideal got = ideal_intersect(Ideal(Q, {qx}), Ideal(Q, {qy}));
  CHECK(got.is_zero_in_ring());
}

TEST_CASE("random intersection certificate: membership both sides") {
  RingCtx R = tu::ring_xyz();
  Rng rng(67);
  for (int t = 0; t < 10; ++t) {
    Ideal A(R, {tu::random_poly(R, rng, 2, 2, false), tu::random_poly(R, rng, 2, 2, false)});
    Ideal B(R, {tu::random_poly(R, rng, 2, 2, false)});
    Ideal I = ideal_intersect(A, B);  // internal certificate throws on failure
    // and products land in the intersection (soundness spot-check)
    if (!A.gens().empty() && !B.gens().empty())
      CHECK(I.contains(ring_mul(R, A.gens()[0], B.gens()[0])));
  }
}
