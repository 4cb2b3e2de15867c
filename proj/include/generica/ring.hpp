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

#ifndef GENERICA_RING_HPP
#define GENERICA_RING_HPP

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace generica {

/// Ambient ring R = k[x_1..x_v]/J. `modulus` holds the reduced Groebner
/// basis of J in the free polynomial ring (empty pointer: J = 0). The first
/// `nparams` variables are substitution parameters when the context was
/// built by with_parameters() (split ring R[u_1..u_r]).
///
/// The graded maximal ideal (x_1,...,x_v) plays the role of the Jacobson
/// radical throughout; see jacobson_proxy_gens().
struct RingCtx {
  FieldDesc field;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex();
  int nparams = 0;
  std::shared_ptr<const std::vector<Polynomial>> modulus;  // reduced GB of J or null

  std::size_t nvars() const { return vars.size(); }
  bool has_modulus() const { return modulus && !modulus->empty(); }

  static RingCtx polynomial(FieldDesc f, std::vector<std::string> names,
                            MonomialOrder ord = MonomialOrder::grevlex()) {
    RingCtx R;
    R.field = f;
    R.vars = std::move(names);
    R.order = ord;
    return R;
  }

  /// Same ring presentation, modulus dropped (the free polynomial ring view).
  RingCtx free_ring() const {
    RingCtx R = *this;
    R.modulus.reset();
    return R;
  }

  bool same_presentation(const RingCtx& o) const {
    if (!(field == o.field) || vars != o.vars || !(order == o.order)) return false;
    const bool am = has_modulus(), bm = o.has_modulus();
    if (am != bm) return false;
    if (am && *modulus != *o.modulus) return false;
    return true;
  }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  Polynomial var(std::size_t i) const {
    Monomial m(nvars());
    m.e[i] = 1;
    m.deg = 1;
    return poly_term(std::move(m), Scalar::one(field));
  }

  Polynomial constant(long long n) const { return poly_const(field, n, nvars()); }

  /// Generators of the Jacobson-radical proxy m = (x_1..x_v) (variable images).
  std::vector<Polynomial> jacobson_proxy_gens() const {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < nvars(); ++i) g.push_back(var(i));
    return g;
  }
};

inline void require_same_ctx(const RingCtx& a, const RingCtx& b, const char* where) {
  if (!a.same_presentation(b)) throw context_error(std::string(where) + ": ring context mismatch");
}

/// Normal form modulo the base ideal J (no-op when J = 0).
inline Polynomial ring_nf(const RingCtx& R, const Polynomial& p) {
  if (!R.has_modulus()) return p;
  return poly_nf(p, *R.modulus, R.order);
}

inline Polynomial ring_add(const RingCtx& R, const Polynomial& a, const Polynomial& b) {
  return poly_add(a, b, R.order);  // NF is linear, inputs assumed reduced
}

inline Polynomial ring_sub(const RingCtx& R, const Polynomial& a, const Polynomial& b) {
  return poly_sub(a, b, R.order);
}

/// Canonical-form product, reduced modulo the base ideal when present.
inline Polynomial ring_mul(const RingCtx& R, const Polynomial& a, const Polynomial& b) {
  return ring_nf(R, poly_mul_raw(a, b, R.order));
}

inline Polynomial ring_pow(const RingCtx& R, const Polynomial& a, int n) {
  Polynomial r = R.constant(1);
  for (int i = 0; i < n; ++i) r = ring_mul(R, r, a);
  return r;
}

// ---------------------------------------------------------------------------
// Split ring R[u_1..u_r] and substitution
// ---------------------------------------------------------------------------

/// Adjoin r parameter variables in front of the base ring's variables.
/// The base modulus lifts: a GB of J in k[x] stays a GB in k[u,x] when the
/// new variables form the leading block under grevlex/lex.
inline RingCtx with_parameters(const RingCtx& base, const std::vector<std::string>& params) {
  RingCtx R;
  R.field = base.field;
  R.vars = params;
  R.vars.insert(R.vars.end(), base.vars.begin(), base.vars.end());
  R.order = base.order;
  R.nparams = static_cast<int>(params.size());
  if (base.has_modulus()) {
    auto lifted = std::make_shared<std::vector<Polynomial>>();
    for (const auto& g : *base.modulus) {
      Polynomial lg;
      for (const auto& tm : g.t) {
        Monomial m(R.nvars());
        for (std::size_t i = 0; i < base.nvars(); ++i) m.e[params.size() + i] = tm.m.e[i];
        m.deg = tm.m.deg;
        lg.t.push_back(Term{std::move(m), tm.c});
      }
      lifted->push_back(canonicalize(std::move(lg.t), R.order));
    }
    R.modulus = lifted;
  }
  return R;
}

/// Lift a base-ring polynomial into the split ring (parameters unused).
inline Polynomial lift_to_split(const RingCtx& split, const RingCtx& base, const Polynomial& p) {
  const std::size_t r = static_cast<std::size_t>(split.nparams);
  Polynomial lp;
  for (const auto& tm : p.t) {
    Monomial m(split.nvars());
    for (std::size_t i = 0; i < base.nvars(); ++i) m.e[r + i] = tm.m.e[i];
    m.deg = tm.m.deg;
    lp.t.push_back(Term{std::move(m), tm.c});
  }
  return canonicalize(std::move(lp.t), split.order);
}

/// Specialize the parameters of a split-ring polynomial: u_i -> assignment[i].
/// Ring homomorphism into the base ring (fully expanded and reduced).
inline Polynomial substitute(const RingCtx& split, const Polynomial& h,
                             const std::vector<Polynomial>& assignment, const RingCtx& base) {
  const std::size_t r = static_cast<std::size_t>(split.nparams);
  if (assignment.size() != r)
    throw dimension_error("substitute: assignment arity " + std::to_string(assignment.size()) +
                          " != parameter count " + std::to_string(r));
  if (split.nvars() != r + base.nvars()) throw context_error("substitute: split/base var mismatch");

  // power cache per parameter
  std::vector<std::vector<Polynomial>> pows(r);
  for (std::size_t i = 0; i < r; ++i) pows[i].push_back(base.constant(1));

  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    while (static_cast<int>(pows[i].size()) <= e)
      pows[i].push_back(ring_mul(base, pows[i].back(), assignment[i]));
    return pows[i][static_cast<std::size_t>(e)];
  };

  Polynomial acc;
  for (const auto& tm : h.t) {
    Monomial tail(base.nvars());
    for (std::size_t i = 0; i < base.nvars(); ++i) tail.e[i] = tm.m.e[r + i];
    tail.deg = 0;
    for (auto v : tail.e) tail.deg += v;
    Polynomial piece = poly_term(std::move(tail), tm.c);
    for (std::size_t i = 0; i < r; ++i)
      if (tm.m.e[i] > 0) piece = poly_mul_raw(piece, power(i, tm.m.e[i]), base.order);
    acc = poly_add(acc, piece, base.order);
  }
  return ring_nf(base, acc);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

inline std::string mono_str(const RingCtx& R, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << R.vars[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

inline std::string poly_str(const RingCtx& R, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& tm : p.t) {
    std::string cs = tm.c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (tm.m.is_one()) {
      os << cs;
    } else if (cs == "1") {
      os << mono_str(R, tm.m);
    } else {
      os << cs << "*" << mono_str(R, tm.m);
    }
  }
  return os.str();
}

}  // namespace generica

#endif  // GENERICA_RING_HPP
