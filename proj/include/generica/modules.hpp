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

#ifndef GENERICA_MODULES_HPP
#define GENERICA_MODULES_HPP

#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "groebner.hpp"

namespace generica {

/// Element of a free module R^k.
struct FreeVec {
  std::vector<Polynomial> c;

  FreeVec() = default;
  explicit FreeVec(std::size_t rank) : c(rank) {}
  explicit FreeVec(std::vector<Polynomial> comps) : c(std::move(comps)) {}

  std::size_t rank() const { return c.size(); }
  bool is_zero() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
  bool operator==(const FreeVec& o) const { return c == o.c; }
};

inline FreeVec basis_vec(const RingCtx& R, std::size_t rank, std::size_t pos) {
  FreeVec v(rank);
  v.c[pos] = R.constant(1);
  return v;
}

inline FreeVec vec_add(const RingCtx& R, const FreeVec& a, const FreeVec& b) {
  if (a.rank() != b.rank()) throw dimension_error("vector add: rank mismatch");
  FreeVec r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r.c[i] = poly_add(a.c[i], b.c[i], R.order);
  return r;
}

inline FreeVec vec_sub(const RingCtx& R, const FreeVec& a, const FreeVec& b) {
  if (a.rank() != b.rank()) throw dimension_error("vector sub: rank mismatch");
  FreeVec r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r.c[i] = poly_sub(a.c[i], b.c[i], R.order);
  return r;
}

inline FreeVec vec_term_mul(const FreeVec& a, const Monomial& m, const Scalar& s) {
  FreeVec r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r.c[i] = poly_term_mul(a.c[i], m, s);
  return r;
}

inline FreeVec vec_poly_mul(const RingCtx& R, const Polynomial& p, const FreeVec& a) {
  FreeVec r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r.c[i] = poly_mul_raw(p, a.c[i], R.order);
  return r;
}

inline FreeVec vec_nf_components(const RingCtx& R, FreeVec v) {
  for (auto& p : v.c) p = ring_nf(R, p);
  return v;
}

/// Position-over-term: any term in an earlier position beats every term in a
/// later one; within a position the ring order applies. e_0 > e_1 > ... .
struct ModTerm {
  int pos = -1;  // -1: zero vector
  Monomial m;
  Scalar c;
};

inline ModTerm vec_lt(const FreeVec& v) {
  for (std::size_t i = 0; i < v.rank(); ++i)
    if (!v.c[i].is_zero()) return ModTerm{static_cast<int>(i), v.c[i].lm(), v.c[i].lc()};
  return ModTerm{};
}

/// Full normal form of v against W (every component term reduced). Positions
/// before p are final once the sweep passes p, because each w in W has zero
/// components before its leading position.
struct VecDivisionResult {
  std::vector<Polynomial> quotients;
  FreeVec remainder;
};

inline VecDivisionResult vec_divrem(const RingCtx& R, const FreeVec& v,
                                    std::span<const FreeVec> W, bool want_quotients = false) {
  VecDivisionResult res;
  if (want_quotients) res.quotients.assign(W.size(), Polynomial{});
  FreeVec work = v;
  const std::size_t k = v.rank();
  for (std::size_t pos = 0; pos < k; ++pos) {
    std::size_t idx = 0;  // index into the canonical term list of component pos
    while (idx < work.c[pos].t.size()) {
      const Term cur = work.c[pos].t[idx];
      bool reduced = false;
      for (std::size_t i = 0; i < W.size(); ++i) {
        ModTerm wl = vec_lt(W[i]);
        if (wl.pos != static_cast<int>(pos)) continue;
        if (!mono_divides(wl.m, cur.m)) continue;
        Monomial mq = mono_div(cur.m, wl.m);
        Scalar cq = cur.c / wl.c;
        work = vec_sub(R, work, vec_term_mul(W[i], mq, cq));
        if (want_quotients)
          res.quotients[i] = poly_add(res.quotients[i], poly_term(mq, cq), R.order);
        reduced = true;
        break;
      }
      if (!reduced) ++idx;
    }
  }
  res.remainder = std::move(work);
  return res;
}

inline FreeVec vec_nf(const RingCtx& R, const FreeVec& v, std::span<const FreeVec> W) {
  return vec_divrem(R, v, W).remainder;
}

inline FreeVec vec_svector(const RingCtx& R, const FreeVec& f, const FreeVec& g) {
  ModTerm lf = vec_lt(f), lg = vec_lt(g);
  if (lf.pos != lg.pos || lf.pos < 0) throw domain_error("s-vector needs matching lead positions");
  Monomial l = mono_lcm(lf.m, lg.m);
  FreeVec a = vec_term_mul(f, mono_div(l, lf.m), lf.c.inv());
  FreeVec b = vec_term_mul(g, mono_div(l, lg.m), lg.c.inv());
  return vec_sub(R, a, b);
}

/// Module Buchberger under position-over-term. No pair-skip criteria (the
/// product criterion is unsound componentwise); the final S-certification
/// covers every same-position pair of the output.
inline std::vector<FreeVec> module_buchberger(const RingCtx& R, const std::vector<FreeVec>& input) {
  std::vector<FreeVec> basis;
  std::set<std::tuple<std::int32_t, int, int>> queue;

  auto add_elem = [&](FreeVec v) {
    int idx = static_cast<int>(basis.size());
    ModTerm lv = vec_lt(v);
    for (int i = 0; i < idx; ++i) {
      ModTerm li = vec_lt(basis[i]);
      if (li.pos == lv.pos)
        queue.insert({mono_lcm(li.m, lv.m).deg, i, idx});
    }
    basis.push_back(std::move(v));
  };

  for (const auto& v : input) {
    FreeVec r = vec_nf(R, v, basis);
    if (!r.is_zero()) add_elem(std::move(r));
  }
  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    FreeVec s = vec_svector(R, basis[i], basis[j]);
    FreeVec r = vec_nf(R, s, basis);
    if (!r.is_zero()) add_elem(std::move(r));
  }

  // minimalize on leading terms, then tail-reduce and normalize
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ModTerm li = vec_lt(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      ModTerm lj = vec_lt(basis[j]);
      if (lj.pos != li.pos || !mono_divides(lj.m, li.m)) continue;
      if (lj.m != li.m || j < i) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<FreeVec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  std::vector<FreeVec> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FreeVec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    FreeVec red = vec_nf(R, minimal[i], others);
    ModTerm l = vec_lt(red);
    Scalar inv = l.c.inv();
    for (auto& p : red.c) p = poly_scale(p, inv);
    out.push_back(std::move(red));
  }

  auto lt_greater = [&](const FreeVec& a, const FreeVec& b) {
    ModTerm la = vec_lt(a), lb = vec_lt(b);
    if (la.pos != lb.pos) return la.pos < lb.pos;
    return mono_cmp(la.m, lb.m, R.order) > 0;
  };
  std::sort(out.begin(), out.end(), lt_greater);

  // certification: every same-position S-vector of the output reduces to zero
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (vec_lt(out[i]).pos != vec_lt(out[j]).pos) continue;
      if (!vec_nf(R, vec_svector(R, out[i], out[j]), out).is_zero())
        throw certification_error("module GB certificate failed");
    }
  return out;
}

// ---------------------------------------------------------------------------
// Submodule of a free module over R (quotient moduli folded in)
// ---------------------------------------------------------------------------

class Submodule {
 public:
  Submodule() = default;
  Submodule(RingCtx R, std::size_t ambient_rank, std::vector<FreeVec> gens)
      : R_(std::move(R)), rank_(ambient_rank) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
      if (g.rank() != rank_) throw dimension_error("submodule generator rank mismatch");
      gens_.push_back(vec_nf_components(R_, std::move(g)));
    }
    cache_ = std::make_shared<Cache>();
  }

  const RingCtx& ctx() const { return R_; }
  std::size_t ambient_rank() const { return rank_; }
  const std::vector<FreeVec>& gens() const { return gens_; }

  /// Reduced module GB of (gens + J.R^k) in the free ring.
  const std::vector<FreeVec>& module_gb() const {
    if (!cache_->gb) {
      std::vector<FreeVec> in = gens_;
      if (R_.has_modulus())
        for (std::size_t pos = 0; pos < rank_; ++pos)
          for (const auto& jg : *R_.modulus) {
            FreeVec v(rank_);
            v.c[pos] = jg;
            in.push_back(std::move(v));
          }
      cache_->gb = module_buchberger(R_.free_ring(), in);
    }
    return *cache_->gb;
  }

  FreeVec nf(const FreeVec& v) const {
    if (v.rank() != rank_) throw dimension_error("submodule nf: rank mismatch");
    return vec_nf(R_.free_ring(), v, module_gb());
  }
  bool contains(const FreeVec& v) const { return nf(v).is_zero(); }

  bool equals(const Submodule& o) const {
    require_same_ctx(R_, o.R_, "submodule equality");
    if (rank_ != o.rank_) return false;
    return module_gb() == o.module_gb();
  }

  /// Whole ambient module: every basis vector is contained.
  bool is_full() const {
    for (std::size_t i = 0; i < rank_; ++i)
      if (!contains(basis_vec(R_, rank_, i))) return false;
    return true;
  }

  bool is_zero_in_ring() const {
    for (const auto& g : gens_)
      if (!g.is_zero()) return false;
    return true;
  }

 private:
  struct Cache {
    std::optional<std::vector<FreeVec>> gb;
  };
  RingCtx R_;
  std::size_t rank_ = 0;
  std::vector<FreeVec> gens_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Syzygies
// ---------------------------------------------------------------------------

/// Generators of {(a_1..a_s) : sum a_i gens[i] = 0 in R^k}; over a quotient
/// ring, "= 0" means congruent modulo J.R^k. Computed as the tail block of a
/// module GB of the graph vectors (gens[i], e_i): under position-over-term
/// the head block dominates, so elements with zero head are exactly the
/// syzygies, and the GB property makes them a generating set.
inline std::vector<FreeVec> syzygies(const RingCtx& R, const std::vector<FreeVec>& gens,
                                     std::size_t ambient_rank) {
  const std::size_t s = gens.size();
  const std::size_t k = ambient_rank;
  std::vector<FreeVec> graph;
  for (std::size_t i = 0; i < s; ++i) {
    if (gens[i].rank() != k) throw dimension_error("syzygies: ambient rank mismatch");
    FreeVec v(k + s);
    for (std::size_t p = 0; p < k; ++p) v.c[p] = gens[i].c[p];
    v.c[k + i] = R.constant(1);
    graph.push_back(std::move(v));
  }
  if (R.has_modulus())
    for (std::size_t pos = 0; pos < k; ++pos)
      for (const auto& jg : *R.modulus) {
        FreeVec v(k + s);
        v.c[pos] = jg;
        graph.push_back(std::move(v));
      }

  std::vector<FreeVec> gb = module_buchberger(R.free_ring(), graph);
  std::vector<FreeVec> out;
  for (const auto& b : gb) {
    bool head_zero = true;
    for (std::size_t p = 0; p < k && head_zero; ++p)
      if (!b.c[p].is_zero()) head_zero = false;
    if (!head_zero) continue;
    FreeVec tail(s);
    for (std::size_t i = 0; i < s; ++i) tail.c[i] = ring_nf(R, b.c[k + i]);
    if (!tail.is_zero()) out.push_back(std::move(tail));
  }
  // certificate: each syzygy evaluates to zero against the generators
  for (const auto& syz : out) {
    FreeVec acc(k);
    for (std::size_t i = 0; i < s; ++i)
      acc = vec_add(R, acc, vec_poly_mul(R, syz.c[i], gens[i]));
    acc = vec_nf_components(R, acc);
    if (!acc.is_zero()) throw certification_error("syzygy certificate failed");
  }
  return out;
}

inline std::vector<FreeVec> syzygies_of_polys(const RingCtx& R,
                                              const std::vector<Polynomial>& gens) {
  std::vector<FreeVec> vecs;
  for (const auto& g : gens) vecs.push_back(FreeVec{{g}});
  return syzygies(R, vecs, 1);
}

}  // namespace generica

#endif  // GENERICA_MODULES_HPP
