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

#ifndef GENERICA_POLYNOMIAL_HPP
#define GENERICA_POLYNOMIAL_HPP

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace generica {

struct Term {
  Monomial m;
  Scalar c;
};

/// Canonical form: terms strictly decreasing in the active order, no zero
/// coefficients; the zero polynomial is the empty term list.
struct Polynomial {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lt() const { return t.front(); }
  const Monomial& lm() const { return t.front().m; }
  const Scalar& lc() const { return t.front().c; }
  std::int32_t total_degree() const {
    std::int32_t d = -1;
    for (const auto& tm : t) d = std::max(d, tm.m.deg);
    return d;  // -1 for the zero polynomial
  }

  bool operator==(const Polynomial& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i].m != o.t[i].m || t[i].c != o.t[i].c) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

/// Sort, merge duplicates, drop zeros. Idempotent on canonical input.
inline Polynomial canonicalize(std::vector<Term> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, ord) > 0; });
  Polynomial r;
  r.t.reserve(terms.size());
  for (auto& tm : terms) {
    if (!r.t.empty() && r.t.back().m == tm.m) {
      r.t.back().c = r.t.back().c + tm.c;
      if (r.t.back().c.is_zero()) r.t.pop_back();
    } else if (!tm.c.is_zero()) {
      r.t.push_back(std::move(tm));
    }
  }
  return r;
}

inline Polynomial poly_zero() { return Polynomial{}; }

inline Polynomial poly_const(const FieldDesc& f, long long n, std::size_t nvars) {
  Scalar c = Scalar::make(f, n);
  if (c.is_zero()) return {};
  return Polynomial{{Term{Monomial(nvars), c}}};
}

inline Polynomial poly_term(Monomial m, Scalar c) {
  if (c.is_zero()) return {};
  return Polynomial{{Term{std::move(m), std::move(c)}}};
}

/// Merge-add of canonical inputs; stays canonical.
inline Polynomial poly_add(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  Polynomial r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = mono_cmp(a.t[i].m, b.t[j].m, ord);
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      r.t.push_back(b.t[j++]);
    } else {
      Scalar s = a.t[i].c + b.t[j].c;
      if (!s.is_zero()) r.t.push_back(Term{a.t[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

inline Polynomial poly_neg(const Polynomial& a) {
  Polynomial r = a;
  for (auto& tm : r.t) tm.c = -tm.c;
  return r;
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  return poly_add(a, poly_neg(b), ord);
}

inline Polynomial poly_scale(const Polynomial& a, const Scalar& c) {
  if (c.is_zero()) return {};
  Polynomial r = a;
  for (auto& tm : r.t) tm.c = tm.c * c;
  return r;
}

/// Multiply by a single term; preserves canonical order (orders are multiplicative).
inline Polynomial poly_term_mul(const Polynomial& a, const Monomial& m, const Scalar& c) {
  if (c.is_zero() || a.is_zero()) return {};
  Polynomial r;
  r.t.reserve(a.t.size());
  for (const auto& tm : a.t) r.t.push_back(Term{mono_mul(tm.m, m), tm.c * c});
  return r;
}

/// Plain product in the free polynomial ring (no modulus reduction).
inline Polynomial poly_mul_raw(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  Polynomial r;
  for (const auto& tb : b.t) r = poly_add(r, poly_term_mul(a, tb.m, tb.c), ord);
  return r;
}

inline Polynomial poly_monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, a.lc().inv());
}

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

/// Multivariate division: p = sum q_i g_i + r, no term of r divisible by
/// any LT(g_i). The remainder is the unique normal form whenever G is a
/// Groebner basis. Divisor selection: first match in list order.
inline DivisionResult poly_divrem(const Polynomial& p, std::span<const Polynomial> G,
                                  const MonomialOrder& ord, bool want_quotients = false) {
  DivisionResult res;
  if (want_quotients) res.quotients.assign(G.size(), Polynomial{});
  Polynomial work = p;
  std::vector<Term> rem;
  while (!work.is_zero()) {
    const Term& lt = work.lt();
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero()) continue;
      if (mono_divides(G[i].lm(), lt.m)) {
        Monomial mq = mono_div(lt.m, G[i].lm());
        Scalar cq = lt.c / G[i].lc();
        work = poly_sub(work, poly_term_mul(G[i], mq, cq), ord);
        if (want_quotients)
          res.quotients[i] = poly_add(res.quotients[i], poly_term(mq, cq), ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      work.t.erase(work.t.begin());
    }
  }
  res.remainder.t = std::move(rem);  // already in decreasing order
  return res;
}

inline Polynomial poly_nf(const Polynomial& p, std::span<const Polynomial> G,
                          const MonomialOrder& ord) {
  return poly_divrem(p, G, ord).remainder;
}

/// Exact division by a single polynomial; throws if not exact.
inline Polynomial poly_exact_div(const Polynomial& p, const Polynomial& q,
                                 const MonomialOrder& ord) {
  if (q.is_zero()) throw domain_error("exact division by zero polynomial");
  const Polynomial G[1] = {q};
  DivisionResult d = poly_divrem(p, G, ord, true);
  if (!d.remainder.is_zero()) throw domain_error("polynomial division not exact");
  return d.quotients[0];
}

inline bool poly_is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  std::int32_t d = p.t.front().m.deg;
  for (const auto& tm : p.t)
    if (tm.m.deg != d) return false;
  return true;
}

}  // namespace generica

#endif  // GENERICA_POLYNOMIAL_HPP
