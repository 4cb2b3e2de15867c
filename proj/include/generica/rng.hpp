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

#ifndef GENERICA_RNG_HPP
#define GENERICA_RNG_HPP

#include <cstdint>

namespace generica {

/// Deterministic, platform-independent generator (splitmix64 core). The
/// stream is part of every witness/report contract, so no std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n = 0 returns 0.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    // rejection to kill modulo bias; bound loop deterministic on the stream
    std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  long long range(long long lo, long long hi) {  // inclusive bounds
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Per-trial seed derivation: mixes (master, stream id, index) so trial
/// results are independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  Rng r(master ^ (stream * 0x9e3779b97f4a7c15ull) ^ (index * 0xD1B54A32D192ED03ull));
  r.next();
  return r.next();
}

}  // namespace generica

#endif  // GENERICA_RNG_HPP
