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

#ifndef GENERICA_MATRIX_HPP
#define GENERICA_MATRIX_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ring.hpp"

namespace generica {

/// Row-major matrix of polynomials.
struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Polynomial> a;

  PolyMatrix() = default;
  PolyMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
    if (r < 0 || c < 0) throw dimension_error("matrix shape must be non-negative");
  }

  Polynomial& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Polynomial& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  bool operator==(const PolyMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  bool is_zero() const {
    for (const auto& p : a)
      if (!p.is_zero()) return false;
    return true;
  }
};

inline PolyMatrix mat_add(const RingCtx& R, const PolyMatrix& x, const PolyMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw dimension_error("matrix add: shape mismatch");
  PolyMatrix r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = ring_add(R, x.a[i], y.a[i]);
  return r;
}

inline PolyMatrix mat_mul(const RingCtx& R, const PolyMatrix& x, const PolyMatrix& y) {
  if (x.cols != y.rows) throw dimension_error("matrix mul: shape mismatch");
  PolyMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      Polynomial s;
      for (int k = 0; k < x.cols; ++k)
        s = poly_add(s, poly_mul_raw(x.at(i, k), y.at(k, j), R.order), R.order);
      r.at(i, j) = ring_nf(R, s);
    }
  return r;
}

inline PolyMatrix mat_transpose(const PolyMatrix& x) {
  PolyMatrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

inline PolyMatrix mat_submatrix(const PolyMatrix& x, const std::vector<int>& rows,
                                const std::vector<int>& cols) {
  PolyMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] < 0 || rows[i] >= x.rows || cols[j] < 0 || cols[j] >= x.cols)
        throw dimension_error("submatrix: index out of range");
      r.at(static_cast<int>(i), static_cast<int>(j)) = x.at(rows[i], cols[j]);
    }
  return r;
}

/// Laplace expansion along the first row with memoized sub-determinants,
/// keyed by (row mask, col mask). Entry arithmetic is raw (reduction mod the
/// base ideal, when wanted, is the caller's concern via ring_nf).
class DetTable {
 public:
  explicit DetTable(const RingCtx& R, const PolyMatrix& m) : R_(R), m_(m) {}

  Polynomial det(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw dimension_error("det: non-square selection");
    std::uint64_t rm = 0, cm = 0;
    for (int r : rows) rm |= (1ull << r);
    for (int c : cols) cm |= (1ull << c);
    return det_masked(rm, cm, static_cast<int>(rows.size()));
  }

 private:
  Polynomial det_masked(std::uint64_t rm, std::uint64_t cm, int k) {
    if (k == 0) return R_.constant(1);
    auto key = std::make_pair(rm, cm);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int row = 0;
    while (!(rm & (1ull << row))) ++row;
    std::uint64_t rm2 = rm & ~(1ull << row);

    Polynomial acc;
    int sign = 1;
    for (int col = 0; col < m_.cols; ++col) {
      if (!(cm & (1ull << col))) continue;
      const Polynomial& e = m_.at(row, col);
      if (!e.is_zero()) {
        Polynomial sub = det_masked(rm2, cm & ~(1ull << col), k - 1);
        Polynomial contrib = poly_mul_raw(e, sub, R_.order);
        if (sign < 0) contrib = poly_neg(contrib);
        acc = poly_add(acc, contrib, R_.order);
      }
      sign = -sign;
    }
    memo_.emplace(key, acc);
    return acc;
  }

  const RingCtx& R_;
  const PolyMatrix& m_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> memo_;
};

inline Polynomial mat_det(const RingCtx& R, const PolyMatrix& m) {
  if (m.rows != m.cols) throw dimension_error("det: matrix not square");
  std::vector<int> idx;
  for (int i = 0; i < m.rows; ++i) idx.push_back(i);
  DetTable t(R, m);
  return ring_nf(R, t.det(idx, idx));
}

/// Bareiss fraction-free elimination; all divisions are exact in the
/// polynomial ring. Independent route used to cross-check Laplace.
inline Polynomial mat_det_bareiss(const RingCtx& R, const PolyMatrix& input) {
  if (input.rows != input.cols) throw dimension_error("det: matrix not square");
  const int n = input.rows;
  if (n == 0) return R.constant(1);
  PolyMatrix m = input;
  Polynomial prev = R.constant(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return {};  // zero column: det = 0
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = poly_sub(poly_mul_raw(m.at(i, j), m.at(k, k), R.order),
                                  poly_mul_raw(m.at(i, k), m.at(k, j), R.order), R.order);
        m.at(i, j) = poly_exact_div(num, prev, R.order);
      }
    prev = m.at(k, k);
  }
  Polynomial d = m.at(n - 1, n - 1);
  if (sign < 0) d = poly_neg(d);
  return d;
}

}  // namespace generica

#endif  // GENERICA_MATRIX_HPP
