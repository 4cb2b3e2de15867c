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

#ifndef GENERICA_DIMENSION_HPP
#define GENERICA_DIMENSION_HPP

#include <bit>
#include <cstdint>

#include "groebner.hpp"

namespace generica {

/// dim(R/I) = dim(R/LT(I)): the largest variable subset S with no leading
/// monomial supported inside S (exhaustive over subsets, v <= 20).
/// The unit ideal has dimension -1 by convention.
inline int krull_dim(const Ideal& I) {
  const RingCtx& R = I.ctx();
  const std::size_t v = R.nvars();
  if (v > 20) throw domain_error("krull_dim: variable count beyond desk scale");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.groebner()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < v; ++i)
      if (g.lm().e[i] > 0) s |= (1u << i);
    supports.push_back(s);  // s == 0 for a constant leading term (unit ideal)
  }
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    bool independent = true;
    for (std::uint32_t s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, static_cast<int>(std::popcount(mask)));
  }
  return best;
}

inline int dim_ambient(const RingCtx& R) { return krull_dim(Ideal(R, {})); }

struct HeightReport {
  int height = 0;
  int dim_ambient = 0;
  int dim_quotient = 0;
  bool equidimensionality_assumed = false;
};

/// height(I) = dim R - dim R/I. Exact for polynomial rings; in quotient-ring
/// contexts this is the codimension of the largest component and the report
/// carries equidimensionality_assumed.
inline HeightReport height(const Ideal& I) {
  if (I.is_unit()) throw domain_error("height undefined for unit ideal");
  HeightReport r;
  r.dim_ambient = dim_ambient(I.ctx());
  r.dim_quotient = krull_dim(I);
  r.height = r.dim_ambient - r.dim_quotient;
  r.equidimensionality_assumed = I.ctx().has_modulus();
  return r;
}

inline int height_value(const Ideal& I) { return height(I).height; }

}  // namespace generica

#endif  // GENERICA_DIMENSION_HPP
