#include <doctest.h>

#include <generica/determinantal.hpp>
#include <generica/dimension.hpp>
#include <generica/grade.hpp>
#include <generica/regular.hpp>
#include <generica/tor_ext.hpp>

#include "test_util.hpp"

using namespace generica;

TEST_CASE("krull dimension") {
  RingCtx R = tu::ring_xyz();
  Polynomial x = R.var(0), y = R.var(1), z = R.var(2);
  CHECK(krull_dim(Ideal(R, {})) == 3);
  // (xy, xz): minimal primes (x) and (y,z), component dims 2 and 1
  CHECK(krull_dim(Ideal(R, {ring_mul(R, x, y), ring_mul(R, x, z)})) == 2);
  CHECK(krull_dim(Ideal(R, {R.constant(1)})) == -1);
}

TEST_CASE("height examples") {
  RingCtx R2 = tu::ring_xy();
  Polynomial x = R2.var(0), y = R2.var(1);
  Ideal I(R2, {x, poly_add(x, ring_mul(R2, y, y), R2.order)});
  HeightReport h = height(I);
  CHECK(h.height == 2);  // quotient is 0-dimensional
  CHECK(h.dim_quotient == 0);
  CHECK_FALSE(h.equidimensionality_assumed);

  RingCtx R3 = tu::ring_xyz();
  Polynomial a = R3.var(0), b = R3.var(1), c = R3.var(2);
  CHECK(height(Ideal(R3, {ring_mul(R3, a, b), ring_mul(R3, a, c)})).height == 1);  // min prime (x)

  CHECK_THROWS_AS(height(Ideal(R2, {R2.constant(1)})), domain_error);
}

TEST_CASE("is_nzd examples") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  CHECK(is_nzd(x, Ideal(R, {})));                               // domain
  CHECK_FALSE(is_nzd(x, Ideal(R, {ring_mul(R, x, y)})));        // x*y = 0
  Polynomial f = poly_add(x, ring_mul(R, y, y), R.order);
  CHECK(is_nzd(f, Ideal(R, {x})));  // image is y^2 in k[y], a domain
}

TEST_CASE("regular sequence check") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  Ideal zero(R, {});
  CHECK(regular_sequence_check({x, y}, zero).regular);
  RegSeqReport bad = regular_sequence_check({x, x}, zero);
  CHECK_FALSE(bad.regular);
  CHECK(bad.fail_index == 2);
  // (x, x + y^2) ~ (x, y^2): y^2 is an NZD on k[x,y]/(x)
  CHECK(regular_sequence_check({x, poly_add(x, ring_mul(R, y, y), R.order)}, zero).regular);
  // properness: (x, 1+x) generates the unit ideal
  RegSeqReport unit = regular_sequence_check({x, poly_add(R.constant(1), x, R.order)}, zero);
  CHECK_FALSE(unit.regular);
  CHECK(unit.fail_index == 0);
}

TEST_CASE("grade_koszul examples") {
  RingCtx R3 = tu::ring_xyz();
  Ideal zero3(R3, {});
  CHECK(grade_koszul(std::vector<Polynomial>{R3.var(0), R3.var(1), R3.var(2)}, zero3).grade == 3);

  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  Ideal zero(R, {});
  CHECK(grade_koszul(std::vector<Polynomial>{x, ring_mul(R, x, y)}, zero).grade == 1);
  CHECK(grade_koszul(std::vector<Polynomial>{x}, Ideal(R, {x})).grade == 0);  // x kills R/(x)
}

TEST_CASE("grade_direct examples cross-checked against koszul") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  Ideal zero(R, {});
  Rng rng(97);

  GradeReport g1 = grade_direct(Ideal(R, {x, y}), zero, rng);
  CHECK(g1.grade == 2);
  CHECK_FALSE(g1.uncertified);
  CHECK(regular_sequence_check(g1.witness, zero).regular);

  RingCtx R3 = tu::ring_xyz();
  Polynomial a = R3.var(0), b = R3.var(1), c = R3.var(2);
  Ideal I(R3, {ring_mul(R3, a, b), ring_mul(R3, a, c)});
  GradeReport g2 = grade_direct(I, Ideal(R3, {}), rng);
  CHECK(g2.grade == 1);
  CHECK(g2.grade == grade_koszul(I, Ideal(R3, {})).grade);

  CHECK(grade_direct(Ideal(R, {x}), Ideal(R, {x}), rng).grade == 0);
}

TEST_CASE("grade via ext equals grade via koszul") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  Ideal zero(R, {});

  Ideal ci(R, {x, y});
  CHECK(ext_vanishes(ci, zero, 0));
  CHECK(ext_vanishes(ci, zero, 1));
  CHECK_FALSE(ext_vanishes(ci, zero, 2));
  CHECK(grade_via_ext(ci, zero).grade == 2);

  Ideal I(R, {x, ring_mul(R, x, y)});
  CHECK(grade_via_ext(I, zero).grade == 1);
  CHECK(grade_via_ext(I, zero).grade == grade_koszul(I, zero).grade);

  Ideal Ix(R, {x});
  CHECK_FALSE(ext_vanishes(Ix, Ix, 0));  // Hom(R/(x), R/(x)) != 0
  CHECK(grade_via_ext(Ix, Ix).grade == 0);
}

TEST_CASE("grade is independent of the generating set") {
  RingCtx R = tu::ring_xyz();
  Ideal zero(R, {});
  Rng rng(7);
  std::vector<std::vector<Polynomial>> fixtures = {
      {R.var(0), R.var(1)},
      {R.var(0), ring_mul(R, R.var(0), R.var(1))},
      {ring_mul(R, R.var(0), R.var(1)), ring_mul(R, R.var(0), R.var(2))},
      {R.var(0), R.var(1), R.var(2)},
  };
  for (const auto& gens : fixtures) {
    int base = grade_koszul(gens, zero).grade;
    for (int t = 0; t < 13; ++t) {  // ~50 randomized regenerations across fixtures
      std::vector<Polynomial> bigger = gens;
      Polynomial comb;
      for (const auto& g : gens)
        comb = ring_add(R, comb, ring_mul(R, tu::random_poly(R, rng, 2, 1), g));
      bigger.push_back(comb);  // redundant generator
      CHECK(grade_koszul(bigger, zero).grade == base);
    }
  }
}

TEST_CASE("grade <= height, equality on CM fixtures") {
  RingCtx R = tu::ring_xyz();
  Ideal zero(R, {});
  Polynomial x = R.var(0), y = R.var(1), z = R.var(2);
  std::vector<Ideal> fixtures = {
      Ideal(R, {x}),
      Ideal(R, {x, y}),
      Ideal(R, {x, y, z}),
      Ideal(R, {ring_mul(R, x, y)}),
      Ideal(R, {ring_mul(R, x, y), ring_mul(R, x, z)}),
  };
  for (const auto& I : fixtures) {
    int g = grade_koszul(I, zero).grade;
    int h = height(I).height;
    CHECK(g <= h);
  }
  // complete intersections are CM: equality
  CHECK(grade_koszul(fixtures[1], zero).grade == height(fixtures[1]).height);
  CHECK(grade_koszul(fixtures[2], zero).grade == height(fixtures[2]).height);
}

TEST_CASE("pd/depth/CM examples") {
  RingCtx R2 = tu::ring_xy();
  PdReport a = pd_depth_cm(Ideal(R2, {R2.var(0), R2.var(1)}));
  CHECK(a.pd == 2);
  CHECK(a.depth == 0);
  CHECK(a.dim == 0);
  CHECK(a.cohen_macaulay);
  CHECK(a.betti == std::vector<int>{1, 2, 1});

  RingCtx R3 = tu::ring_xyz();
  Polynomial x = R3.var(0), y = R3.var(1), z = R3.var(2);
  PdReport b = pd_depth_cm(Ideal(R3, {ring_mul(R3, x, y), ring_mul(R3, x, z)}));
  CHECK(b.pd == 2);
  CHECK(b.depth == 1);
  CHECK(b.dim == 2);
  CHECK_FALSE(b.cohen_macaulay);

  CHECK_THROWS_AS(pd_depth_cm(Ideal(R3, {poly_add(x, R3.constant(1), R3.order), y})),
                  domain_error);  // inhomogeneous
}

TEST_CASE("free resolutions: Koszul Betti numbers and exactness certificates") {
  RingCtx R = tu::ring_xy();
  Resolution res = free_resolution(Ideal(R, {R.var(0), R.var(1)}), 5);
  CHECK(res.betti == std::vector<int>{1, 2, 1});
  CHECK_FALSE(res.truncated);
  CHECK(certify_resolution_exactness(res));

  Resolution rx = free_resolution(Ideal(R, {R.var(0)}), 5);
  CHECK(rx.betti == std::vector<int>{1, 1});
  CHECK(certify_resolution_exactness(rx));
}

TEST_CASE("auslander-buchsbaum cross-route: v - pd equals koszul depth") {
  // two independent routes to depth(R/I): the minimal graded resolution
  // (pd via trimmed syzygies) and Koszul homology on the variables
  RingCtx R = tu::ring_xyz();
  Rng rng(907);
  int done = 0;
  while (done < 10) {
    std::vector<Polynomial> gens;
    int ng = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < ng; ++i) gens.push_back(tu::random_homog(R, rng, 1 + (int)rng.below(2)));
    Ideal I(R, gens);
    if (I.is_unit() || I.is_zero_in_ring()) continue;
    Resolution res = free_resolution(I, 4);
    REQUIRE_FALSE(res.truncated);
    GradeReport depth = grade_koszul(R.jacobson_proxy_gens(), I);
    REQUIRE_FALSE(depth.is_infinite());
    CHECK(depth.grade == 3 - res.pd());
    // and the ext route agrees with the koszul route on I itself
    CHECK(grade_via_ext(I, Ideal(R, {})).grade == grade_koszul(I, Ideal(R, {})).grade);
    ++done;
  }
}

TEST_CASE("cross-field agreement: GF(32003) vs QQ") {
  // same fixtures over both coefficient fields: invariants agree
  for (FieldDesc f : {gf(32003), rationals()}) {
    RingCtx R = RingCtx::polynomial(f, {"x", "y", "z"});
    Polynomial x = R.var(0), y = R.var(1), z = R.var(2);
    Ideal zero(R, {});
    Ideal I(R, {ring_mul(R, x, y), ring_mul(R, x, z)});
    CHECK(krull_dim(I) == 2);
    CHECK(height(I).height == 1);
    CHECK(grade_koszul(I, zero).grade == 1);
    Ideal twisted(R, {poly_sub(y, ring_mul(R, x, x), R.order),
                      poly_sub(z, ring_mul(R, x, y), R.order)});
    CHECK(height(twisted).height == 2);
    CHECK(grade_koszul(twisted, zero).grade == 2);
  }
  // determinantal table over QQ
  auto [Rq, phi] = generic_matrix_ring(MatrixShape::generic(2, 3), rationals());
  DetProfile p = det_profile(Rq, phi, MatrixShape::generic(2, 3));
  CHECK(p.all_match);
}

TEST_CASE("grade semicontinuity under high-order perturbation") {
  RingCtx R = tu::ring_xy();
  Ideal zero(R, {});
  Polynomial x = R.var(0), y = R.var(1);
  // curated regular pairs (f, M = R); q = max deg f + 1
  std::vector<std::vector<Polynomial>> pairs = {
      {x, y},
      {x, poly_add(x, ring_mul(R, y, y), R.order)},
  };
  Rng rng(3);
  for (const auto& f : pairs) {
    int q = 0;
    for (const auto& p : f) q = std::max(q, static_cast<int>(p.total_degree()));
    q += 1;
    int base = grade_koszul(f, zero).grade;
    for (int t = 0; t < 50; ++t) {
      std::vector<Polynomial> fg = f;
      for (auto& p : fg) {
        Monomial m(R.nvars());
        int d = q + static_cast<int>(rng.below(2));
        for (int k = 0; k < d; ++k) m.e[rng.below(R.nvars())] += 1;
        m.deg = d;
        long long c = static_cast<long long>(rng.below(R.field.p));
        p = ring_add(R, p, poly_term(std::move(m), Scalar::make(R.field, c)));
      }
      CHECK(grade_koszul(fg, zero).grade >= base);
    }
  }
}

TEST_CASE("height semicontinuity under high-order perturbation") {
  RingCtx R = tu::ring_xy();
  Polynomial x = R.var(0), y = R.var(1);
  std::vector<std::vector<Polynomial>> tuples = {
      {x, y},
      {ring_mul(R, x, y)},
      {x, ring_mul(R, x, y)},
  };
  Rng rng(13);
  for (const auto& f : tuples) {
    int q = 0;
    for (const auto& p : f) q = std::max(q, static_cast<int>(p.total_degree()));
    q += 1;
    int base = height(Ideal(R, f)).height;
    for (int t = 0; t < 50; ++t) {
      std::vector<Polynomial> fg = f;
      for (auto& p : fg) {
        Monomial m(R.nvars());
        int d = q + static_cast<int>(rng.below(2));
        for (int k = 0; k < d; ++k) m.e[rng.below(R.nvars())] += 1;
        m.deg = d;
        long long c = static_cast<long long>(rng.below(R.field.p));
        p = ring_add(R, p, poly_term(std::move(m), Scalar::make(R.field, c)));
      }
      Ideal I(R, fg);
      if (I.is_unit()) continue;  // inhomogeneous corner: height undefined
      CHECK(height(I).height >= base);
    }
  }
}
