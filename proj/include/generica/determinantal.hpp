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

#ifndef GENERICA_DETERMINANTAL_HPP
#define GENERICA_DETERMINANTAL_HPP

#include <string>
#include <vector>

#include "grade.hpp"

namespace generica {

struct MatrixShape {
  enum class Kind { Generic, Symmetric, Skew };
  Kind kind = Kind::Generic;
  int m = 0, n = 0;  // m = n for symmetric/skew

  static MatrixShape generic(int m, int n) { return {Kind::Generic, m, n}; }
  static MatrixShape symmetric(int m) { return {Kind::Symmetric, m, m}; }
  static MatrixShape skew(int m) { return {Kind::Skew, m, m}; }

  std::string kind_name() const {
    switch (kind) {
      case Kind::Generic: return "generic";
      case Kind::Symmetric: return "symmetric";
      case Kind::Skew: return "skew";
    }
    return "?";
  }
};

/// The matrix of indeterminates over its own coordinate ring: generic uses
/// x<i><j> (1-based), symmetric shares x<i><j> = x<j><i>, skew mirrors with
/// sign and zero diagonal.
inline std::pair<RingCtx, PolyMatrix> generic_matrix_ring(const MatrixShape& s,
                                                          FieldDesc f = gf(32003),
                                                          MonomialOrder ord = MonomialOrder::grevlex()) {
  auto name = [](int i, int j) { return "x" + std::to_string(i + 1) + std::to_string(j + 1); };
  std::vector<std::string> vars;
  std::vector<std::vector<int>> slot(static_cast<std::size_t>(s.m),
                                     std::vector<int>(static_cast<std::size_t>(s.n), -1));
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.n; ++j) {
      bool fresh = false;
      switch (s.kind) {
        case MatrixShape::Kind::Generic: fresh = true; break;
        case MatrixShape::Kind::Symmetric: fresh = (i <= j); break;
        case MatrixShape::Kind::Skew: fresh = (i < j); break;
      }
      if (fresh) {
        slot[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<int>(vars.size());
        vars.push_back(name(i, j));
      }
    }
  RingCtx R = RingCtx::polynomial(f, vars, ord);
  PolyMatrix phi(s.m, s.n);
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.n; ++j) {
      switch (s.kind) {
        case MatrixShape::Kind::Generic:
          phi.at(i, j) = R.var(static_cast<std::size_t>(slot[i][j]));
          break;
        case MatrixShape::Kind::Symmetric:
          phi.at(i, j) = R.var(static_cast<std::size_t>(i <= j ? slot[i][j] : slot[j][i]));
          break;
        case MatrixShape::Kind::Skew:
          if (i == j)
            phi.at(i, j) = poly_zero();
          else if (i < j)
            phi.at(i, j) = R.var(static_cast<std::size_t>(slot[i][j]));
          else
            phi.at(i, j) = poly_neg(R.var(static_cast<std::size_t>(slot[j][i])));
          break;
      }
    }
  return {std::move(R), std::move(phi)};
}

/// All r x r minors, rows/columns enumerated lexicographically by index set;
/// Laplace expansion with memoized sub-determinants.
inline std::vector<Polynomial> minors(const RingCtx& R, const PolyMatrix& phi, int r) {
  if (r < 1 || r > std::min(phi.rows, phi.cols))
    throw dimension_error("minors: order out of range");
  DetTable dt(R, phi);
  std::vector<Polynomial> out;
  auto rsets = detail::subsets_of_size(phi.rows, r);
  auto csets = detail::subsets_of_size(phi.cols, r);
  for (const auto& rs : rsets)
    for (const auto& cs : csets) out.push_back(ring_nf(R, dt.det(rs, cs)));
  return out;
}

/// Determinantal ideal of a block: I_r of the selected rows/columns (full
/// matrix when the selections are empty).
inline Ideal det_ideal(const RingCtx& R, const PolyMatrix& phi, int r,
                       const std::vector<int>& rows = {}, const std::vector<int>& cols = {}) {
  PolyMatrix block = phi;
  if (!rows.empty() || !cols.empty()) {
    std::vector<int> rr = rows, cc = cols;
    if (rr.empty())
      for (int i = 0; i < phi.rows; ++i) rr.push_back(i);
    if (cc.empty())
      for (int j = 0; j < phi.cols; ++j) cc.push_back(j);
    if (rr.empty() || cc.empty()) throw dimension_error("det_ideal: empty block");
    block = mat_submatrix(phi, rr, cc);
  }
  if (block.rows == 0 || block.cols == 0) throw dimension_error("det_ideal: empty block");
  return Ideal(R, minors(R, block, r));
}

/// Closed-form expected heights for matrices of indeterminates:
/// generic (m-j)(n-j); symmetric C(m+1-j, 2); skew C(m-j, 2) for even j and
/// C(m+1-j, 2) for odd j.
inline int expected_height(const MatrixShape& s, int j) {
  if (j < 0 || j > std::min(s.m, s.n)) throw dimension_error("expected_height: j out of range");
  auto choose2 = [](int k) { return k < 2 ? 0 : k * (k - 1) / 2; };
  switch (s.kind) {
    case MatrixShape::Kind::Generic: return (s.m - j) * (s.n - j);
    case MatrixShape::Kind::Symmetric: return choose2(s.m + 1 - j);
    case MatrixShape::Kind::Skew:
      return (j % 2 == 0) ? choose2(s.m - j) : choose2(s.m + 1 - j);
  }
  return 0;
}

struct DetProfileRow {
  int j = 0;
  int generators = 0;
  int computed_height = 0;
  int computed_grade = -1;  // -1: not requested
  int expected = 0;         // min(table value, dim of the ambient ring)
  bool matches = false;
};

struct DetProfile {
  MatrixShape shape;
  std::vector<DetProfileRow> rows;
  bool all_match = true;
};

/// Height (optionally grade) of every I_{j+1}(phi) against the closed-form
/// expectation, capped by the ambient dimension. The `matches` flags drive
/// the genericity experiments.
inline DetProfile det_profile(const RingCtx& R, const PolyMatrix& phi, const MatrixShape& shape,
                              bool with_grade = false) {
  DetProfile prof;
  prof.shape = shape;
  const int cap = dim_ambient(R);
  const int top = std::min(phi.rows, phi.cols);
  for (int j = 0; j < top; ++j) {
    DetProfileRow row;
    row.j = j;
    std::vector<Polynomial> gens = minors(R, phi, j + 1);
    row.generators = static_cast<int>(gens.size());
    Ideal I(R, gens);
    row.expected = std::min(expected_height(shape, j), cap);
    if (I.is_unit()) {
      // block of units: V(I) empty; record as cap+1 mismatch sentinel
      row.computed_height = cap + 1;
    } else {
      row.computed_height = height(I).height;
    }
    if (with_grade) {
      GradeReport g = grade_koszul(gens, Ideal(R, {}));
      row.computed_grade = g.is_infinite() ? kGradeInfinity : g.grade;
    }
    row.matches = (row.computed_height == row.expected);
    if (!row.matches) prof.all_match = false;
    prof.rows.push_back(row);
  }
  return prof;
}

/// McCoy-type criterion for injectivity of R^a -> R^b presented by a b x a
/// matrix (columns are the images): injective iff (0 : I_a(phi)) = 0.
/// For a = b this is exactly the determinant non-zero-divisor test.
inline bool injectivity_check(const RingCtx& R, const PolyMatrix& phi) {
  const int a = phi.cols, b = phi.rows;
  if (a > b) throw dimension_error("injectivity_check: map R^a -> R^b requires a <= b");
  std::vector<Polynomial> gens = minors(R, phi, a);
  Ideal zero(R, {});
  Ideal ann(R, {R.constant(1)});  // start at (1): ann(I) = ∩ (0 : g)
  bool first = true;
  for (const auto& g : gens) {
    Polynomial gr = ring_nf(R, g);
    if (gr.is_zero()) continue;
    Ideal colon = ideal_quotient(zero, gr);
    ann = first ? colon : ideal_intersect(ann, colon);
    first = false;
  }
  if (first) return false;  // I_a(phi) = 0: never injective for a >= 1
  return ann.equals(zero);
}

}  // namespace generica

#endif  // GENERICA_DETERMINANTAL_HPP
