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

#ifndef GENERICA_TOR_EXT_HPP
#define GENERICA_TOR_EXT_HPP

#include "grade.hpp"

namespace generica {

namespace detail {

inline Resolution resolution_for_derived(const Ideal& I, int j) {
  const RingCtx& R = I.ctx();
  int len = std::max(static_cast<int>(R.nvars()) + 1, j + 2);
  Resolution res = free_resolution(I, len);
  if (res.truncated && res.pd() < j + 2)
    throw domain_error("derived functor undecided beyond resolution length " +
                       std::to_string(res.pd()));
  return res;
}

/// Tensor the resolution with R/J: same matrices over the extended modulus.
inline ChainComplex tensor_with_quotient(const Resolution& res, const Ideal& J) {
  RingCtx ctx = extend_modulus(res.C.R, J.gens());
  std::vector<PolyMatrix> diffs;
  for (const auto& d : res.C.diffs) {
    PolyMatrix nd = d;
    for (auto& p : nd.a) p = ring_nf(ctx, p);
    diffs.push_back(std::move(nd));
  }
  return make_complex(ctx, res.C.ranks, std::move(diffs));
}

/// Hom(-, R/J) of the resolution as a chain complex: slot k holds
/// Hom(F_{len-k}), with transposed differentials, so Ext^j sits at slot
/// len - j (cokernel convention at slot 0 computes the top Ext).
inline ChainComplex hom_into_quotient(const Resolution& res, const Ideal& J) {
  RingCtx ctx = extend_modulus(res.C.R, J.gens());
  const int len = res.C.length();
  std::vector<int> ranks;
  for (int k = 0; k <= len; ++k) ranks.push_back(res.C.ranks[static_cast<std::size_t>(len - k)]);
  std::vector<PolyMatrix> diffs;
  for (int k = 1; k <= len; ++k) {
    PolyMatrix t = mat_transpose(res.C.diff(len - k + 1));
    for (auto& p : t.a) p = ring_nf(ctx, p);
    diffs.push_back(std::move(t));
  }
  return make_complex(ctx, std::move(ranks), std::move(diffs));
}

inline bool module_is_zero(const Ideal& J) { return Ideal(J.ctx(), J.gens()).is_unit(); }

}  // namespace detail

/// Tor_j(R/I, R/J) = 0 ?
inline bool tor_vanishes(const Ideal& I, const Ideal& J, int j) {
  if (j < 0) throw dimension_error("tor_vanishes: j >= 0 required");
  require_same_ctx(I.ctx(), J.ctx(), "tor_vanishes");
  if (detail::module_is_zero(J)) return true;
  Resolution res = detail::resolution_for_derived(I, j);
  if (j > res.C.length()) return true;  // beyond a complete finite resolution
  ChainComplex tensored = detail::tensor_with_quotient(res, J);
  return homology_vanishes(tensored, j).vanishes;
}

/// Ext^j(R/I, R/J) = 0 ?
inline bool ext_vanishes(const Ideal& I, const Ideal& J, int j) {
  if (j < 0) throw dimension_error("ext_vanishes: j >= 0 required");
  require_same_ctx(I.ctx(), J.ctx(), "ext_vanishes");
  if (detail::module_is_zero(J)) return true;
  Resolution res = detail::resolution_for_derived(I, j);
  if (j > res.C.length()) return true;
  ChainComplex co = detail::hom_into_quotient(res, J);
  return homology_vanishes(co, res.C.length() - j).vanishes;
}

/// grade_I(M) = inf{ i : Ext^i(R/I, M) != 0 }; must agree with grade_koszul
/// (hard invariant, exercised by the test suites).
inline GradeReport grade_via_ext(const Ideal& I, const Ideal& module_ideal) {
  GradeReport rep;
  rep.method = GradeMethod::Ext;
  if (detail::module_is_zero(module_ideal)) {
    rep.grade = kGradeInfinity;
    return rep;
  }
  Resolution res = detail::resolution_for_derived(I, 0);
  if (res.truncated)
    throw domain_error("grade_via_ext undecided: truncated resolution");
  ChainComplex co = detail::hom_into_quotient(res, module_ideal);
  for (int j = 0; j <= res.C.length(); ++j) {
    if (!homology_vanishes(co, res.C.length() - j).vanishes) {
      rep.grade = j;
      return rep;
    }
  }
  rep.grade = kGradeInfinity;
  return rep;
}

}  // namespace generica

#endif  // GENERICA_TOR_EXT_HPP
