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

#ifndef GENERICA_EAGON_NORTHCOTT_HPP
#define GENERICA_EAGON_NORTHCOTT_HPP

#include <map>
#include <string>
#include <vector>

#include "determinantal.hpp"

namespace generica {

namespace detail {

/// Multi-indices (a_1..a_m) >= 0 with sum q, lexicographic. Divided-power
/// basis exponents of D_q(G*); contraction lowers one slot by 1 with
/// coefficient 1 (divided-power convention, characteristic-free).
inline std::vector<std::vector<int>> compositions(int m, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == m - 1) {
      cur[static_cast<std::size_t>(pos)] = rem;
      out.push_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, rem - k);
    }
  };
  if (m == 0) {
    if (q == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, q);
  return out;
}

struct ENBasis {
  // slot basis: (column subset S of size m+k-1, divided multi-index a)
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> divided;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;

  int size() const { return static_cast<int>(subsets.size()) * 0 + static_cast<int>(index.size()); }
};

inline ENBasis en_basis(int n, int subset_size, int m, int divided_deg) {
  ENBasis b;
  auto subs = subsets_of_size(n, subset_size);
  auto divs = compositions(m, divided_deg);
  int idx = 0;
  for (const auto& S : subs)
    for (const auto& a : divs) b.index[{S, a}] = idx++;
  b.subsets = std::move(subs);
  b.divided = std::move(divs);
  return b;
}

/// Contraction differential of the generalized Eagon-Northcott family:
/// (S, a) -> sum_t sum_u (-1)^{t+1} phi[u][S[t]] (S \ S[t], a - e_u).
inline PolyMatrix en_contraction(const RingCtx& R, const PolyMatrix& phi, const ENBasis& target,
                                 const ENBasis& source) {
  PolyMatrix d(target.size(), source.size());
  for (const auto& [key, col] : source.index) {
    const auto& [S, a] = key;
    for (std::size_t t = 0; t < S.size(); ++t) {
      std::vector<int> S2 = S;
      S2.erase(S2.begin() + static_cast<std::ptrdiff_t>(t));
      for (std::size_t u = 0; u < a.size(); ++u) {
        if (a[u] == 0) continue;
        std::vector<int> a2 = a;
        a2[u] -= 1;
        auto it = target.index.find({S2, a2});
        if (it == target.index.end()) continue;
        Polynomial entry = phi.at(static_cast<int>(u), S[t]);
        if (t % 2 == 1) entry = poly_neg(entry);
        d.at(it->second, col) = poly_add(d.at(it->second, col), entry, R.order);
      }
    }
  }
  return d;
}

inline Polynomial signed_minor(DetTable& dt, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
  return dt.det(rows, cols);
}

}  // namespace detail

/// Explicit generalized Eagon-Northcott complexes for a map R^n -> R^m given
/// by the m x n matrix phi (m <= n, n <= 5 at desk scale):
///   which = 0: the Eagon-Northcott complex, F_0 = R, d_1 = maximal minors;
///   which = 1: the Buchsbaum-Rim complex, F_0 = R^m, d_1 = phi.
/// d^2 = 0 is certified by make_complex; in the generic case C^0 resolves
/// R/I_m(phi) and C^1 resolves coker(phi).
inline ChainComplex eagon_northcott(const RingCtx& R, const PolyMatrix& phi, int which) {
  const int m = phi.rows, n = phi.cols;
  if (m > n) throw dimension_error("eagon_northcott: requires rows <= cols");
  if (m < 1) throw dimension_error("eagon_northcott: empty matrix");
  if (n > 5) throw domain_error("eagon_northcott: explicit construction capped at 5 columns");
  if (which != 0 && which != 1)
    throw domain_error("explicit construction out of scope for i >= 2, use en_acyclic_by_grade");

  std::vector<int> all_rows;
  for (int i = 0; i < m; ++i) all_rows.push_back(i);
  DetTable dt(R, phi);

  std::vector<int> ranks;
  std::vector<PolyMatrix> diffs;

  if (which == 0) {
    ranks.push_back(1);
    std::vector<detail::ENBasis> bases;  // bases[k-1] for slot k
    const int top = n - m + 1;
    for (int k = 1; k <= top; ++k) bases.push_back(detail::en_basis(n, m + k - 1, m, k - 1));
    for (int k = 1; k <= top; ++k) ranks.push_back(bases[static_cast<std::size_t>(k - 1)].size());

    // d_1: maximal minors
    PolyMatrix d1(1, ranks[1]);
    for (const auto& [key, col] : bases[0].index)
      d1.at(0, col) = ring_nf(R, detail::signed_minor(dt, all_rows, key.first));
    diffs.push_back(std::move(d1));
    for (int k = 2; k <= top; ++k)
      diffs.push_back(detail::en_contraction(R, phi, bases[static_cast<std::size_t>(k - 2)],
                                             bases[static_cast<std::size_t>(k - 1)]));
    return make_complex(R, ranks, std::move(diffs), {"eagon-northcott"});
  }

  // Buchsbaum-Rim
  ranks.push_back(m);
  ranks.push_back(n);
  std::vector<detail::ENBasis> bases;  // bases[k-2] for slot k >= 2
  const int top = n - m + 1;
  for (int k = 2; k <= top; ++k) bases.push_back(detail::en_basis(n, m + k - 1, m, k - 2));
  for (int k = 2; k <= top; ++k) ranks.push_back(bases[static_cast<std::size_t>(k - 2)].size());

  PolyMatrix d1 = phi;
  for (auto& p : d1.a) p = ring_nf(R, p);
  diffs.push_back(std::move(d1));

  if (top >= 2) {
    // d_2: signed maximal minors into the column basis
    PolyMatrix d2(n, ranks[2]);
    for (const auto& [key, col] : bases[0].index) {
      const auto& S = key.first;  // size m+1
      for (std::size_t t = 0; t < S.size(); ++t) {
        std::vector<int> S2 = S;
        S2.erase(S2.begin() + static_cast<std::ptrdiff_t>(t));
        Polynomial e = ring_nf(R, detail::signed_minor(dt, all_rows, S2));
        if (t % 2 == 1) e = poly_neg(e);
        d2.at(S[t], col) = e;
      }
    }
    diffs.push_back(std::move(d2));
    for (int k = 3; k <= top; ++k)
      diffs.push_back(detail::en_contraction(R, phi, bases[static_cast<std::size_t>(k - 3)],
                                             bases[static_cast<std::size_t>(k - 2)]));
  }
  return make_complex(R, ranks, std::move(diffs), {"buchsbaum-rim"});
}

struct EnGradeLevel {
  int j = 0;
  int computed_grade = 0;  // grade of I_{j+1}(phi) on R
  int expected = 0;        // min((m-j)(n-j), grade_m(R))
  bool matches = false;
};

struct EnGradeVerdict {
  int i = 0;          // which generalized complex C^i
  bool acyclic = false;  // exactness criterion for the family holds
  bool required = false;  // i > r in the caller's threshold sense
};

struct EnGradeReport {
  std::vector<EnGradeLevel> levels;    // j = 0..m-1
  std::vector<EnGradeVerdict> verdicts;  // i = 0..m-1
  int grade_cap = 0;
};

/// Acyclicity-by-grade for the generalized family. The per-level records
/// compare grade(I_{j+1}(phi)) with min((m-j)(n-j), grade_m(R)); the
/// acyclicity verdict itself is the exactness criterion for the family:
/// grade(I_m(phi)) = n - m + 1 (maximal possible), which is equivalent to
/// exactness for C^0 and C^1 and sufficient for every C^i. Cross-checked
/// against explicit homology for i in {0,1} by the test suites.
inline EnGradeReport en_acyclic_by_grade(const RingCtx& R, const PolyMatrix& phi, int r = -1,
                                         int levels_from = 0) {
  const int m = phi.rows, n = phi.cols;
  if (m > n) throw dimension_error("en_acyclic_by_grade: requires rows <= cols");
  EnGradeReport rep;
  Ideal zero(R, {});
  if (R.has_modulus()) {
    GradeReport g = grade_koszul(R.jacobson_proxy_gens(), zero);
    rep.grade_cap = g.is_infinite() ? 0 : g.grade;
  } else {
    rep.grade_cap = static_cast<int>(R.nvars());  // grade_m(k[x]) = v
  }
  for (int j = std::max(0, levels_from); j <= m - 1; ++j) {
    EnGradeLevel lvl;
    lvl.j = j;
    std::vector<Polynomial> gens = minors(R, phi, j + 1);
    GradeReport g = grade_koszul(gens, zero);
    lvl.computed_grade = g.is_infinite() ? kGradeInfinity : g.grade;
    lvl.expected = std::min((m - j) * (n - j), rep.grade_cap);
    lvl.matches = (lvl.computed_grade == lvl.expected);
    rep.levels.push_back(lvl);
  }
  if (rep.levels.empty() || rep.levels.back().j != m - 1)
    throw dimension_error("en_acyclic_by_grade: top level not computed");
  const bool top_condition = rep.levels.back().computed_grade == n - m + 1;
  for (int i = 0; i <= m - 1; ++i) {
    EnGradeVerdict v;
    v.i = i;
    v.acyclic = top_condition;
    v.required = (i > r);
    rep.verdicts.push_back(v);
  }
  return rep;
}

}  // namespace generica

#endif  // GENERICA_EAGON_NORTHCOTT_HPP
