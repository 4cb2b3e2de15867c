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

#ifndef GENERICA_COMPLEX_HPP
#define GENERICA_COMPLEX_HPP

#include <string>
#include <vector>

#include "modules.hpp"

namespace generica {

/// Finite complex of free modules F_len -> ... -> F_1 -> F_0. diff(i) is
/// d_i : F_i -> F_{i-1} (columns are images of basis vectors); d o d = 0 is
/// checked at construction and after perturbation.
struct ChainComplex {
  RingCtx R;
  std::vector<int> ranks;         // ranks[i] = rank F_i
  std::vector<PolyMatrix> diffs;  // diffs[i-1] = d_i, i = 1..len
  std::vector<std::string> labels;

  int length() const { return static_cast<int>(ranks.size()) - 1; }
  const PolyMatrix& diff(int i) const { return diffs[static_cast<std::size_t>(i - 1)]; }
};

inline std::vector<FreeVec> matrix_columns(const PolyMatrix& m) {
  std::vector<FreeVec> cols;
  for (int j = 0; j < m.cols; ++j) {
    FreeVec v(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) v.c[static_cast<std::size_t>(i)] = m.at(i, j);
    cols.push_back(std::move(v));
  }
  return cols;
}

inline PolyMatrix columns_to_matrix(int rows, const std::vector<FreeVec>& cols) {
  PolyMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(i)];
  return m;
}

/// Validates shapes and d_{i} o d_{i+1} = 0 over R (entries reduce to zero
/// modulo the base ideal). Throws domain_error naming the failing slot.
inline ChainComplex make_complex(RingCtx R, std::vector<int> ranks, std::vector<PolyMatrix> diffs,
                                 std::vector<std::string> labels = {}) {
  if (ranks.empty()) throw dimension_error("complex needs at least F_0");
  if (diffs.size() + 1 != ranks.size()) throw dimension_error("complex: rank/diff count mismatch");
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i].rows != ranks[i] || diffs[i].cols != ranks[i + 1])
      throw dimension_error("complex: differential shape mismatch at slot " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    PolyMatrix prod = mat_mul(R, diffs[i], diffs[i + 1]);
    for (const auto& p : prod.a)
      if (!ring_nf(R, p).is_zero())
        throw domain_error("not a complex: d_" + std::to_string(i + 1) + " o d_" +
                           std::to_string(i + 2) + " != 0");
  }
  ChainComplex C;
  C.R = std::move(R);
  C.ranks = std::move(ranks);
  C.diffs = std::move(diffs);
  C.labels = std::move(labels);
  return C;
}

/// Homology witness. For a vanishing slot the kernel generators and their
/// zero normal forms re-verify; otherwise `witness` is a kernel generator with
/// nonzero normal form modulo the image.
struct HomologyCertificate {
  int slot = 0;
  bool vanishes = false;
  std::vector<FreeVec> kernel_gens;
  FreeVec witness;      // nonzero NF (non-vanishing case)
  FreeVec witness_raw;  // the kernel generator it came from

  /// Recompute the normal form of the stored witness data.
  bool reverify(const ChainComplex& C) const;
};

namespace detail {

inline Submodule image_submodule(const ChainComplex& C, int slot) {
  // image of d_{slot+1} inside F_slot; empty generating set beyond the top
  std::vector<FreeVec> gens;
  if (slot + 1 <= C.length()) gens = matrix_columns(C.diff(slot + 1));
  return Submodule(C.R, static_cast<std::size_t>(C.ranks[static_cast<std::size_t>(slot)]),
                   std::move(gens));
}

}  // namespace detail

/// H_i(C): kernel via syzygies, tested against the module GB of the image.
/// Slot 0 uses the cokernel convention: vanishes iff im(d_1) spans F_0.
inline HomologyCertificate homology_vanishes(const ChainComplex& C, int i) {
  if (i < 0 || i > C.length()) throw dimension_error("homology slot out of range");
  HomologyCertificate cert;
  cert.slot = i;
  if (i == 0) {
    Submodule im = detail::image_submodule(C, 0);
    cert.vanishes = im.is_full();
    if (!cert.vanishes) {
      for (std::size_t p = 0; p < static_cast<std::size_t>(C.ranks[0]); ++p) {
        FreeVec e = basis_vec(C.R, static_cast<std::size_t>(C.ranks[0]), p);
        FreeVec nf = im.nf(e);
        if (!nf.is_zero()) {
          cert.witness_raw = e;
          cert.witness = nf;
          break;
        }
      }
    }
    return cert;
  }

  std::vector<FreeVec> cols = matrix_columns(C.diff(i));
  cert.kernel_gens =
      syzygies(C.R, cols, static_cast<std::size_t>(C.ranks[static_cast<std::size_t>(i - 1)]));
  Submodule im = detail::image_submodule(C, i);
  cert.vanishes = true;
  for (const auto& g : cert.kernel_gens) {
    FreeVec nf = im.nf(g);
    if (!nf.is_zero()) {
      cert.vanishes = false;
      cert.witness_raw = g;
      cert.witness = nf;
      break;
    }
  }
  return cert;
}

inline bool HomologyCertificate::reverify(const ChainComplex& C) const {
  Submodule im = detail::image_submodule(C, slot);
  if (vanishes) {
    if (slot == 0) return im.is_full();
    for (const auto& g : kernel_gens)
      if (!im.contains(g)) return false;
    return true;
  }
  return im.nf(witness_raw) == witness && !witness.is_zero();
}

/// High-order deformation: replace d_i by d_i + psi_i when the result is
/// still a complex; a broken d o d = 0 is reported as data (domain_error
/// naming the slot), since such a psi is simply outside the admissible set.
inline ChainComplex perturb_complex(const ChainComplex& C, const std::vector<PolyMatrix>& psis) {
  if (psis.size() != C.diffs.size())
    throw dimension_error("perturb_complex: one psi per differential required");
  std::vector<PolyMatrix> nd;
  for (std::size_t i = 0; i < C.diffs.size(); ++i) {
    if (psis[i].rows != C.diffs[i].rows || psis[i].cols != C.diffs[i].cols)
      throw dimension_error("perturb_complex: psi shape mismatch at slot " + std::to_string(i + 1));
    nd.push_back(mat_add(C.R, C.diffs[i], psis[i]));
  }
  return make_complex(C.R, C.ranks, std::move(nd), C.labels);
}

}  // namespace generica

#endif  // GENERICA_COMPLEX_HPP
