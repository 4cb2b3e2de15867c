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

#ifndef GENERICA_MONOMIAL_HPP
#define GENERICA_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace generica {

/// Dense exponent vector with cached total degree.
struct Monomial {
  std::vector<std::int32_t> e;
  std::int32_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0), deg(0) {}
  explicit Monomial(std::vector<std::int32_t> exps)
      : e(std::move(exps)), deg(std::accumulate(e.begin(), e.end(), 0)) {}

  std::size_t nvars() const { return e.size(); }
  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size()) throw dimension_error("monomial arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  r.deg = a.deg + b.deg;
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.e.size() != b.e.size()) throw dimension_error("monomial arity mismatch");
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  // a / b, assuming b | a
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] -= b.e[i];
    if (r.e[i] < 0) throw domain_error("monomial division not exact");
  }
  r.deg = a.deg - b.deg;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size()) throw dimension_error("monomial arity mismatch");
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  r.deg = std::accumulate(r.e.begin(), r.e.end(), 0);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

/// Term orders. All are total, multiplicative, with 1 minimal.
/// block_elim(k) eliminates the first k variables: compares the head block
/// by grevlex first, then the tail block by grevlex.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, BlockElim };
  Kind kind = Kind::Grevlex;
  int block = 0;  // eliminated prefix size for BlockElim

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_elim(int k) { return {Kind::BlockElim, k}; }

  bool operator==(const MonomialOrder&) const = default;

  std::string name() const {
    switch (kind) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::BlockElim: return "block" + std::to_string(block);
    }
    return "?";
  }
};

namespace detail {

inline int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    std::int32_t d = a.e[i] - b.e[i];
    if (d != 0) return d > 0 ? -1 : 1;  // last nonzero of a-b negative => a greater
  }
  return 0;
}

}  // namespace detail

/// -1: a < b, 0: equal, 1: a > b.
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  if (a.e.size() != b.e.size()) throw dimension_error("monomial_compare: arity mismatch");
  const std::size_t n = a.e.size();
  switch (ord.kind) {
    case MonomialOrder::Kind::Grevlex:
      return detail::grevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        std::int32_t d = a.e[i] - b.e[i];
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Kind::BlockElim: {
      const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(ord.block), n);
      int c = detail::grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return detail::grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

}  // namespace generica

#endif  // GENERICA_MONOMIAL_HPP
