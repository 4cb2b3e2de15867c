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

#ifndef GENERICA_RESOLUTION_HPP
#define GENERICA_RESOLUTION_HPP

#include <vector>

#include "complex.hpp"

namespace generica {

/// Drop generators contained in the span of the remaining ones. Removal
/// never changes the span; for homogeneous input (graded Nakayama) the
/// surviving set is a minimal generating set, which is what makes the
/// resulting resolutions minimal. Sorted by degree so low-degree generators
/// survive.
inline std::vector<FreeVec> trim_generators(const RingCtx& R, std::vector<FreeVec> gens,
                                            std::size_t ambient_rank) {
  std::vector<FreeVec> kept;
  for (auto& g : gens) {
    FreeVec h = vec_nf_components(R, std::move(g));
    if (!h.is_zero()) kept.push_back(std::move(h));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const FreeVec& a, const FreeVec& b) {
    auto deg = [](const FreeVec& v) {
      std::int32_t d = -1;
      for (const auto& p : v.c) d = std::max(d, p.total_degree());
      return d;
    };
    return deg(a) < deg(b);
  });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<FreeVec> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      if (Submodule(R, ambient_rank, others).contains(kept[i])) {
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return kept;
}

struct Resolution {
  ChainComplex C;
  bool truncated = false;
  std::vector<int> betti;  // betti[i] = rank F_i

  int pd() const { return C.length(); }
};

namespace detail {

inline Resolution resolve(const RingCtx& R, std::size_t ambient, std::vector<FreeVec> gens,
                          int max_length) {
  if (max_length < 1) throw dimension_error("free_resolution: max_length >= 1 required");
  std::vector<FreeVec> cur = trim_generators(R, std::move(gens), ambient);

  std::vector<int> ranks = {static_cast<int>(ambient)};
  std::vector<PolyMatrix> diffs;
  bool truncated = false;
  std::size_t cur_ambient = ambient;
  while (!cur.empty()) {
    if (static_cast<int>(diffs.size()) >= max_length) {
      truncated = true;
      break;
    }
    diffs.push_back(columns_to_matrix(static_cast<int>(cur_ambient), cur));
    ranks.push_back(static_cast<int>(cur.size()));
    std::vector<FreeVec> syz = syzygies(R, cur, cur_ambient);
    cur_ambient = cur.size();
    cur = trim_generators(R, std::move(syz), cur_ambient);
  }

  Resolution res;
  res.C = make_complex(R, ranks, std::move(diffs));
  res.truncated = truncated;
  res.betti = res.C.ranks;
  return res;
}

}  // namespace detail

/// Resolution of R/I: F_len -> ... -> F_1 -> F_0 = R with im(F_1) = I.
/// Generating sets are trimmed at every step, so graded homogeneous input
/// yields minimal Betti numbers. Quotient rings may not terminate; the
/// `truncated` flag records a cut at max_length.
inline Resolution free_resolution(const Ideal& I, int max_length) {
  std::vector<FreeVec> gens;
  for (const auto& g : I.gens())
    if (!g.is_zero()) gens.push_back(FreeVec{{g}});
  return detail::resolve(I.ctx(), 1, std::move(gens), max_length);
}

inline Resolution free_resolution(const Submodule& N, int max_length) {
  return detail::resolve(N.ctx(), N.ambient_rank(), N.gens(), max_length);
}

/// Re-derives the exactness of every interior step from scratch: the kernel
/// of d_i (fresh syzygy run) must reduce to zero modulo the image of d_{i+1};
/// when the resolution is not truncated, the top kernel must vanish.
inline bool certify_resolution_exactness(const Resolution& res) {
  const ChainComplex& C = res.C;
  for (int i = 1; i <= C.length(); ++i) {
    std::vector<FreeVec> ker = syzygies(
        C.R, matrix_columns(C.diff(i)),
        static_cast<std::size_t>(C.ranks[static_cast<std::size_t>(i - 1)]));
    if (i < C.length()) {
      Submodule im(C.R, static_cast<std::size_t>(C.ranks[static_cast<std::size_t>(i)]),
                   matrix_columns(C.diff(i + 1)));
      for (const auto& g : ker)
        if (!im.contains(g)) return false;
    } else if (!res.truncated) {
      for (const auto& g : ker)
        if (!g.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace generica

#endif  // GENERICA_RESOLUTION_HPP
