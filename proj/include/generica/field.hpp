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

#ifndef GENERICA_FIELD_HPP
#define GENERICA_FIELD_HPP

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <variant>

#include "errors.hpp"

namespace generica {

enum class FieldKind { Fp, Rational };

/// Ring coefficient field: GF(p) for a prime p < 2^31, or exact rationals.
struct FieldDesc {
  FieldKind kind = FieldKind::Fp;
  std::uint64_t p = 32003;

  bool operator==(const FieldDesc&) const = default;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldDesc gf(std::uint64_t p) {
  if (p >= (1ull << 31)) throw domain_error("GF(p): p must be < 2^31");
  if (!is_prime_u64(p)) throw domain_error("GF(p): " + std::to_string(p) + " is not prime");
  return FieldDesc{FieldKind::Fp, p};
}

inline FieldDesc rationals() { return FieldDesc{FieldKind::Rational, 0}; }

/// Exact field element. Fp values live in [0, p); rationals are kept in
/// lowest terms with positive denominator (mpq_class canonicalizes).
class Scalar {
 public:
  struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;
    bool operator==(const Fp&) const = default;
  };

  Scalar() : u_(Fp{0, 0}) {}  // unattached zero; usable only via make()

  static Scalar make(const FieldDesc& f, long long n) {
    if (f.kind == FieldKind::Fp) {
      long long r = n % static_cast<long long>(f.p);
      if (r < 0) r += static_cast<long long>(f.p);
      return Scalar(Fp{static_cast<std::uint64_t>(r), f.p});
    }
    return Scalar(mpq_class(static_cast<long>(n)));
  }

  static Scalar make_rational(long long num, long long den) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(q);
  }

  static Scalar zero(const FieldDesc& f) { return make(f, 0); }
  static Scalar one(const FieldDesc& f) { return make(f, 1); }

  bool is_fp() const { return std::holds_alternative<Fp>(u_); }
  bool is_zero() const {
    if (is_fp()) return std::get<Fp>(u_).v == 0;
    return std::get<mpq_class>(u_) == 0;
  }
  bool is_one() const {
    if (is_fp()) return std::get<Fp>(u_).v == 1;
    return std::get<mpq_class>(u_) == 1;
  }

  std::uint64_t fp_value() const { return std::get<Fp>(u_).v; }
  std::uint64_t fp_mod() const { return std::get<Fp>(u_).p; }
  const mpq_class& rat() const { return std::get<mpq_class>(u_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_fp()) {
      auto [av, p] = a.matched(b);
      std::uint64_t s = av + b.fp_value();
      if (s >= p) s -= p;
      return Scalar(Fp{s, p});
    }
    return Scalar(mpq_class(a.rat() + b.rat()));
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_fp()) {
      auto [av, p] = a.matched(b);
      std::uint64_t bv = b.fp_value();
      return Scalar(Fp{av >= bv ? av - bv : av + p - bv, p});
    }
    return Scalar(mpq_class(a.rat() - b.rat()));
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_fp()) {
      auto [av, p] = a.matched(b);
      return Scalar(Fp{(av * b.fp_value()) % p, p});
    }
    return Scalar(mpq_class(a.rat() * b.rat()));
  }

  Scalar operator-() const {
    if (is_fp()) {
      auto f = std::get<Fp>(u_);
      return Scalar(Fp{f.v == 0 ? 0 : f.p - f.v, f.p});
    }
    return Scalar(mpq_class(-rat()));
  }

  Scalar inv() const {
    if (is_zero()) throw domain_error("division by zero field element");
    if (is_fp()) {
      auto f = std::get<Fp>(u_);
      // extended Euclid on (v, p)
      long long t = 0, nt = 1;
      long long r = static_cast<long long>(f.p), nr = static_cast<long long>(f.v);
      while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
      }
      if (t < 0) t += static_cast<long long>(f.p);
      return Scalar(Fp{static_cast<std::uint64_t>(t), f.p});
    }
    return Scalar(mpq_class(1 / rat()));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  bool operator==(const Scalar& o) const { return u_ == o.u_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Balanced integer representative for printing: Fp value mapped into
  /// (-p/2, p/2]; throws for rationals (printed via mpq).
  long long fp_balanced() const {
    auto f = std::get<Fp>(u_);
    if (f.v > f.p / 2) return static_cast<long long>(f.v) - static_cast<long long>(f.p);
    return static_cast<long long>(f.v);
  }

  std::string str() const {
    if (is_fp()) return std::to_string(fp_balanced());
    return rat().get_str();
  }

 private:
  explicit Scalar(Fp f) : u_(f) {}
  explicit Scalar(mpq_class q) : u_(std::move(q)) {}

  std::pair<std::uint64_t, std::uint64_t> matched(const Scalar& b) const {
    const auto& f = std::get<Fp>(u_);
    if (!b.is_fp() || b.fp_mod() != f.p) throw context_error("field mismatch in scalar arithmetic");
    return {f.v, f.p};
  }

  std::variant<Fp, mpq_class> u_;
};

}  // namespace generica

#endif  // GENERICA_FIELD_HPP
