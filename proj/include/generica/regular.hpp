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

#ifndef GENERICA_REGULAR_HPP
#define GENERICA_REGULAR_HPP

#include "ideal_ops.hpp"

namespace generica {

/// f is a non-zero-divisor on M = R/J iff (J : f) = J (reduced GB equality).
/// On the zero module every element is vacuously a non-zero-divisor; the zero
/// element of a nonzero module is not.
inline bool is_nzd(const Polynomial& f, const Ideal& J) {
  if (J.is_unit()) return true;
  const RingCtx& R = J.ctx();
  Polynomial fr = J.nf(ring_nf(R, f));
  if (fr.is_zero()) return false;
  Ideal colon = ideal_quotient(J, f);
  return colon.equals(J);
}

struct RegSeqReport {
  bool regular = false;
  // 1-based index of the first failing element; 0 when the failure is
  // (J + (f)) = R (the sequence generates the unit ideal on M).
  int fail_index = -1;
};

/// Iterated non-zero-divisor test: f_{i+1} regular on R/(J + (f_1..f_i)).
/// With require_proper, (J + (f)) != R is also demanded (the glossary's
/// (f)M != M condition, automatic for tuples inside m in the graded setting).
inline RegSeqReport regular_sequence_check(const std::vector<Polynomial>& f, const Ideal& J,
                                           bool require_proper = true) {
  const RingCtx& R = J.ctx();
  Ideal cur = J;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_nzd(f[i], cur)) return {false, static_cast<int>(i) + 1};
    std::vector<Polynomial> gens = cur.gens();
    gens.push_back(ring_nf(R, f[i]));
    cur = Ideal(R, std::move(gens));
  }
  if (require_proper && cur.is_unit()) return {false, 0};
  return {true, -1};
}

}  // namespace generica

#endif  // GENERICA_REGULAR_HPP
