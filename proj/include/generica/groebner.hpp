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

#ifndef GENERICA_GROEBNER_HPP
#define GENERICA_GROEBNER_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"

namespace generica {

namespace detail {

struct SPair {
  std::int32_t lcm_deg;
  int i, j;
  // normal strategy: minimal lcm degree first, deterministic index tie-break
  bool operator<(const SPair& o) const {
    return std::tie(lcm_deg, i, j) < std::tie(o.lcm_deg, o.i, o.j);
  }
};

}  // namespace detail

inline Polynomial spolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  Monomial l = mono_lcm(f.lm(), g.lm());
  Polynomial a = poly_term_mul(f, mono_div(l, f.lm()), f.lc().inv());
  Polynomial b = poly_term_mul(g, mono_div(l, g.lm()), g.lc().inv());
  return poly_sub(a, b, ord);
}

struct GBResult {
  std::vector<Polynomial> basis;  // reduced, monic, sorted by decreasing LM
  // basis[i] == sum_j cofactors[i][j] * input[j], exactly (when tracked)
  std::vector<std::vector<Polynomial>> cofactors;
};

/// Buchberger with normal pair selection. Output is the reduced Groebner
/// basis; before returning, every S-polynomial of output pairs is reduced to
/// zero (criteria are used only to skip work during the build, never for the
/// certificate). Throws certification_error if the certificate fails.
inline GBResult buchberger(const RingCtx& R, const std::vector<Polynomial>& input,
                           bool track_cofactors = false) {
  const MonomialOrder& ord = R.order;
  const std::size_t n_in = input.size();

  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cof;

  auto reduce_tracked = [&](Polynomial p, std::vector<Polynomial> pc)
      -> std::pair<Polynomial, std::vector<Polynomial>> {
    if (!track_cofactors) return {poly_nf(p, basis, ord), {}};
    DivisionResult d = poly_divrem(p, basis, ord, true);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (d.quotients[k].is_zero()) continue;
      for (std::size_t j = 0; j < n_in; ++j)
        pc[j] = poly_sub(pc[j], poly_mul_raw(d.quotients[k], cof[k][j], ord), ord);
    }
    return {std::move(d.remainder), std::move(pc)};
  };

  std::set<detail::SPair> queue;
  auto add_elem = [&](Polynomial p, std::vector<Polynomial> pc) {
    int idx = static_cast<int>(basis.size());
    for (int i = 0; i < idx; ++i)
      queue.insert(detail::SPair{mono_lcm(basis[i].lm(), p.lm()).deg, i, idx});
    basis.push_back(std::move(p));
    if (track_cofactors) cof.push_back(std::move(pc));
  };

  for (std::size_t j = 0; j < n_in; ++j) {
    Polynomial p = input[j];
    if (p.is_zero()) continue;
    std::vector<Polynomial> pc;
    if (track_cofactors) {
      pc.assign(n_in, Polynomial{});
      pc[j] = poly_const(R.field, 1, R.nvars());
    }
    auto [r, rc] = reduce_tracked(std::move(p), std::move(pc));
    if (!r.is_zero()) add_elem(std::move(r), std::move(rc));
  }

  while (!queue.empty()) {
    detail::SPair pr = *queue.begin();
    queue.erase(queue.begin());
    const Polynomial& f = basis[pr.i];
    const Polynomial& g = basis[pr.j];
    if (mono_coprime(f.lm(), g.lm())) continue;  // product criterion skip
    Polynomial s = spolynomial(f, g, ord);
    std::vector<Polynomial> sc;
    if (track_cofactors) {
      Monomial l = mono_lcm(f.lm(), g.lm());
      sc.assign(n_in, Polynomial{});
      Monomial mf = mono_div(l, f.lm());
      Monomial mg = mono_div(l, g.lm());
      Scalar cf = f.lc().inv();
      Scalar cg = g.lc().inv();
      for (std::size_t j = 0; j < n_in; ++j)
        sc[j] = poly_sub(poly_term_mul(cof[pr.i][j], mf, cf), poly_term_mul(cof[pr.j][j], mg, cg),
                         ord);
    }
    auto [r, rc] = reduce_tracked(std::move(s), std::move(sc));
    if (!r.is_zero()) add_elem(std::move(r), std::move(rc));
  }

  // minimalize: drop elements whose LM is divisible by another survivor's LM
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (mono_divides(basis[j].lm(), basis[i].lm()) &&
          (basis[j].lm() != basis[i].lm() || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  std::vector<std::vector<Polynomial>> minimal_cof;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) {
      minimal.push_back(basis[i]);
      if (track_cofactors) minimal_cof.push_back(cof[i]);
    }

  // tail-reduce each element against the others, then normalize monic
  GBResult out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<std::size_t> omap;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) {
        others.push_back(minimal[j]);
        omap.push_back(j);
      }
    DivisionResult d = poly_divrem(minimal[i], others, ord, track_cofactors);
    Polynomial red = d.remainder;
    std::vector<Polynomial> redc;
    if (track_cofactors) {
      redc = minimal_cof[i];
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (d.quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < n_in; ++j)
          redc[j] =
              poly_sub(redc[j], poly_mul_raw(d.quotients[k], minimal_cof[omap[k]][j], ord), ord);
      }
    }
    Scalar inv = red.lc().inv();
    red = poly_scale(red, inv);
    if (track_cofactors)
      for (auto& c : redc) c = poly_scale(c, inv);
    out.basis.push_back(std::move(red));
    if (track_cofactors) out.cofactors.push_back(std::move(redc));
  }

  // deterministic presentation: decreasing leading monomial
  std::vector<std::size_t> perm(out.basis.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return mono_cmp(out.basis[x].lm(), out.basis[y].lm(), ord) > 0;
  });
  GBResult sorted;
  for (std::size_t i : perm) {
    sorted.basis.push_back(std::move(out.basis[i]));
    if (track_cofactors) sorted.cofactors.push_back(std::move(out.cofactors[i]));
  }

  // full S-certification of the final basis
  for (std::size_t i = 0; i < sorted.basis.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.basis.size(); ++j) {
      Polynomial s = spolynomial(sorted.basis[i], sorted.basis[j], ord);
      if (!poly_nf(s, sorted.basis, ord).is_zero())
        throw certification_error("Groebner certificate failed: S-polynomial does not reduce");
    }
  return sorted;
}

// ---------------------------------------------------------------------------
// Ideal: finitely generated, lazily cached reduced GB
// ---------------------------------------------------------------------------

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingCtx R, std::vector<Polynomial> gens) : R_(std::move(R)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) gens_.push_back(ring_nf(R_, std::move(g)));
    cache_ = std::make_shared<Cache>();
  }

  const RingCtx& ctx() const { return R_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// Reduced GB of (gens + base ideal) in the free polynomial ring; the
  /// leading terms of the base-ideal part are tagged via modulus_size().
  const std::vector<Polynomial>& groebner() const {
    if (!cache_->gb) {
      std::vector<Polynomial> in = gens_;
      if (R_.has_modulus()) in.insert(in.end(), R_.modulus->begin(), R_.modulus->end());
      cache_->gb = buchberger(R_.free_ring(), in).basis;
    }
    return *cache_->gb;
  }

  Polynomial nf(const Polynomial& p) const { return poly_nf(p, groebner(), R_.order); }
  bool contains(const Polynomial& p) const { return nf(p).is_zero(); }

  bool is_unit() const {
    const auto& g = groebner();
    return g.size() == 1 && !g[0].is_zero() && g[0].lm().is_one();
  }

  /// The zero ideal of R (gens all reduce to 0 mod the base ideal).
  bool is_zero_in_ring() const {
    for (const auto& g : gens_)
      if (!g.is_zero()) return false;
    return true;
  }

  bool equals(const Ideal& o) const {
    require_same_ctx(R_, o.R_, "ideal equality");
    return groebner() == o.groebner();
  }

  /// Two-sided generation certificate: recomputes the GB with cofactor
  /// tracking, checks each basis element is an exact input combination and
  /// each input reduces to zero. S-certification runs inside buchberger.
  void certify() const {
    std::vector<Polynomial> in = gens_;
    if (R_.has_modulus()) in.insert(in.end(), R_.modulus->begin(), R_.modulus->end());
    GBResult r = buchberger(R_.free_ring(), in, true);
    for (std::size_t i = 0; i < r.basis.size(); ++i) {
      Polynomial acc;
      for (std::size_t j = 0; j < in.size(); ++j)
        acc = poly_add(acc, poly_mul_raw(r.cofactors[i][j], in[j], R_.order), R_.order);
      if (acc != r.basis[i])
        throw certification_error("ideal certificate: basis element is not an input combination");
    }
    for (const auto& g : in)
      if (!poly_nf(g, r.basis, R_.order).is_zero())
        throw certification_error("ideal certificate: generator does not reduce to zero");
  }

  bool all_gens_homogeneous() const {
    for (const auto& g : gens_)
      if (!poly_is_homogeneous(g)) return false;
    return true;
  }

 private:
  struct Cache {
    std::optional<std::vector<Polynomial>> gb;
  };
  RingCtx R_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Build R/J. The modulus is stored as a reduced GB; quotient by the unit
/// ideal (the zero ring) is rejected.
inline RingCtx make_quotient(const RingCtx& base, const std::vector<Polynomial>& jgens) {
  if (base.has_modulus()) {
    // fold into the existing modulus
    std::vector<Polynomial> all = jgens;
    all.insert(all.end(), base.modulus->begin(), base.modulus->end());
    RingCtx R = base.free_ring();
    return make_quotient(R, all);
  }
  GBResult gb = buchberger(base, jgens);
  if (gb.basis.size() == 1 && gb.basis[0].lm().is_one())
    throw domain_error("quotient by the unit ideal (zero ring)");
  RingCtx R = base;
  if (!gb.basis.empty()) R.modulus = std::make_shared<const std::vector<Polynomial>>(gb.basis);
  return R;
}

/// Extend the modulus of R by extra generators (tensoring a cyclic module):
/// returns the context of R/(J + extra).
inline RingCtx extend_modulus(const RingCtx& R, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> all = extra;
  if (R.has_modulus()) all.insert(all.end(), R.modulus->begin(), R.modulus->end());
  RingCtx free = R.free_ring();
  return make_quotient(free, all);
}

}  // namespace generica

#endif  // GENERICA_GROEBNER_HPP
