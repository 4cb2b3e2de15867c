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

#ifndef GENERICA_KOSZUL_HPP
#define GENERICA_KOSZUL_HPP

#include <map>
#include <vector>

#include "complex.hpp"

namespace generica {

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;  // lexicographic
}

}  // namespace detail

/// Koszul complex K(f) tensored with R/J_M: ranks C(r,i), differentials the
/// exterior contraction maps, sign (-1)^{position}. d^2 = 0 is certified by
/// make_complex.
inline ChainComplex koszul_complex(const RingCtx& R, const std::vector<Polynomial>& f,
                                   const std::vector<Polynomial>& module_ideal = {}) {
  const int r = static_cast<int>(f.size());
  if (r < 1) throw dimension_error("koszul_complex: need at least one element");
  RingCtx ctx = module_ideal.empty() ? R : extend_modulus(R, module_ideal);

  std::vector<int> ranks;
  std::vector<PolyMatrix> diffs;
  std::vector<std::vector<std::vector<int>>> levels;  // levels[i] = i-subsets
  for (int i = 0; i <= r; ++i) {
    levels.push_back(detail::subsets_of_size(r, i));
    ranks.push_back(static_cast<int>(levels.back().size()));
  }
  for (int i = 1; i <= r; ++i) {
    std::map<std::vector<int>, int> row_index;
    for (std::size_t a = 0; a < levels[i - 1].size(); ++a)
      row_index[levels[i - 1][a]] = static_cast<int>(a);
    PolyMatrix d(ranks[i - 1], ranks[i]);
    for (std::size_t col = 0; col < levels[i].size(); ++col) {
      const auto& S = levels[i][col];
      for (std::size_t t = 0; t < S.size(); ++t) {
        std::vector<int> S2 = S;
        S2.erase(S2.begin() + static_cast<std::ptrdiff_t>(t));
        Polynomial entry = ring_nf(ctx, f[static_cast<std::size_t>(S[t])]);
        if (t % 2 == 1) entry = poly_neg(entry);
        d.at(row_index[S2], static_cast<int>(col)) = entry;
      }
    }
    diffs.push_back(std::move(d));
  }
  return make_complex(ctx, ranks, std::move(diffs));
}

}  // namespace generica

#endif  // GENERICA_KOSZUL_HPP
