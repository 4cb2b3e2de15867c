/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GENERICA_IDEAL_OPS_HPP
#define GENERICA_IDEAL_OPS_HPP

#include <string>
#include <vector>

#include "groebner.hpp"

namespace generica {

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ctx(a.ctx(), b.ctx(), "ideal_sum");
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ctx(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ctx(a.ctx(), b.ctx(), "ideal_product");
  const RingCtx& R = a.ctx();
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) {
      Polynomial p = ring_mul(R, f, g);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return Ideal(R, std::move(gens));
}

namespace detail {

/// Free ring k[t, x...] with an order eliminating t.
inline RingCtx aux_front_ring(const RingCtx& R, const std::string& aux = "@t") {
  RingCtx big;
  big.field = R.field;
  big.vars = {aux};
  big.vars.insert(big.vars.end(), R.vars.begin(), R.vars.end());
  big.order = MonomialOrder::block_elim(1);
  return big;
}

inline Polynomial lift_front(const RingCtx& big, const Polynomial& p) {
  Polynomial r;
  for (const auto& tm : p.t) {
    Monomial m(big.nvars());
    for (std::size_t i = 0; i + 1 < big.nvars(); ++i) m.e[i + 1] = tm.m.e[i];
    m.deg = tm.m.deg;
    r.t.push_back(Term{std::move(m), tm.c});
  }
  return canonicalize(std::move(r.t), big.order);
}

inline Polynomial drop_front(const RingCtx& small, const Polynomial& p) {
  Polynomial r;
  for (const auto& tm : p.t) {
    if (tm.m.e[0] != 0) throw domain_error("drop_front: polynomial involves the auxiliary variable");
    Monomial m(small.nvars());
    for (std::size_t i = 0; i < small.nvars(); ++i) m.e[i] = tm.m.e[i + 1];
    m.deg = tm.m.deg;
    r.t.push_back(Term{std::move(m), tm.c});
  }
  return canonicalize(std::move(r.t), small.order);
}

/// Lifted generator lists of the two ideals with the base ideal folded in.
inline std::pair<std::vector<Polynomial>, std::vector<Polynomial>> lifted_pair(const Ideal& a,
                                                                               const Ideal& b) {
  std::vector<Polynomial> A = a.gens(), B = b.gens();
  if (a.ctx().has_modulus()) {
    A.insert(A.end(), a.ctx().modulus->begin(), a.ctx().modulus->end());
    B.insert(B.end(), a.ctx().modulus->begin(), a.ctx().modulus->end());
  }
  return {A, B};
}

}  // namespace detail

/// Intersection by the elimination method: eliminate t from t.A + (1-t).B.
/// Certificate: every output generator lies in both inputs.
inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ctx(a.ctx(), b.ctx(), "ideal_intersect");
  const RingCtx& R = a.ctx();
  RingCtx big = detail::aux_front_ring(R);
  Polynomial t = big.var(0);
  Polynomial one_minus_t = poly_sub(big.constant(1), t, big.order);

  auto [A, B] = detail::lifted_pair(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : A) gens.push_back(poly_mul_raw(t, detail::lift_front(big, f), big.order));
  for (const auto& g : B)
    gens.push_back(poly_mul_raw(one_minus_t, detail::lift_front(big, g), big.order));

  GBResult gb = buchberger(big, gens);
  std::vector<Polynomial> out;
  for (const auto& p : gb.basis)
    if (p.lm().e[0] == 0) out.push_back(detail::drop_front(R, p));  // t-free leading term => t-free

  Ideal result(R, out);
  for (const auto& g : result.gens()) {
    if (!a.contains(g) || !b.contains(g))
      throw certification_error("intersection certificate failed");
  }
  return result;
}

/// Colon ideal (a : f) = {g : g.f in a}, via a ∩ (f) and exact division.
/// f = 0 returns the unit ideal by convention, flagged through the out-param.
inline Ideal ideal_quotient(const Ideal& a, const Polynomial& f_in,
                            bool* divisor_was_zero = nullptr) {
  const RingCtx& R = a.ctx();
  if (divisor_was_zero) *divisor_was_zero = false;
  Polynomial f = ring_nf(R, f_in);
  if (f.is_zero()) {
    if (divisor_was_zero) *divisor_was_zero = true;
    return Ideal(R, {R.constant(1)});
  }

  RingCtx big = detail::aux_front_ring(R);
  Polynomial t = big.var(0);
  Polynomial one_minus_t = poly_sub(big.constant(1), t, big.order);
  std::vector<Polynomial> A = a.gens();
  if (R.has_modulus()) A.insert(A.end(), R.modulus->begin(), R.modulus->end());

  std::vector<Polynomial> gens;
  for (const auto& g : A) gens.push_back(poly_mul_raw(t, detail::lift_front(big, g), big.order));
  gens.push_back(poly_mul_raw(one_minus_t, detail::lift_front(big, f), big.order));

  GBResult gb = buchberger(big, gens);
  std::vector<Polynomial> out;
  RingCtx Rfree = R.free_ring();
  for (const auto& p : gb.basis)
    if (p.lm().e[0] == 0) {
      Polynomial h = detail::drop_front(R, p);
      out.push_back(poly_exact_div(h, f, R.order));
    }

  Ideal result(R, out);
  for (const auto& g : result.gens())
    if (!a.contains(ring_mul(R, g, f)))
      throw certification_error("colon certificate failed: (a:f).f not inside a");
  return result;
}

/// Ann(R^r/N) for N = ⊕ I_j: the intersection of the component ideals.
inline Ideal annihilator_of_quotient(const std::vector<Ideal>& components) {
  if (components.empty()) throw dimension_error("annihilator_of_quotient: empty component list");
  Ideal acc = components[0];
  for (std::size_t j = 1; j < components.size(); ++j) acc = ideal_intersect(acc, components[j]);
  return acc;
}

/// The ideal m^q of the Jacobson-radical proxy: all monomials of degree q.
inline Ideal power_of_m(const RingCtx& R, int q) {
  if (q <= 0) return Ideal(R, {R.constant(1)});
  std::vector<Polynomial> gens;
  std::vector<std::int32_t> e(R.nvars(), 0);
  // enumerate compositions of q into nvars parts
  auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
    if (pos + 1 == R.nvars()) {
      e[pos] = rem;
      Monomial m(e);
      gens.push_back(poly_term(std::move(m), Scalar::one(R.field)));
      e[pos] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, rem - k);
    }
    e[pos] = 0;
  };
  rec(rec, 0, q);
  return Ideal(R, std::move(gens));
}

}  // namespace generica

#endif  // GENERICA_IDEAL_OPS_HPP
