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

#ifndef GENERICA_ERRORS_HPP
#define GENERICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace generica {

/// Base class for all engine errors.
class engine_error : public std::runtime_error {
 public:
  explicit engine_error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape/arity mismatches: exponent vector lengths, matrix shapes, tuple arities.
class dimension_error : public engine_error {
 public:
  explicit dimension_error(const std::string& what) : engine_error(what) {}
};

/// Operands from incompatible ring contexts.
class context_error : public engine_error {
 public:
  explicit context_error(const std::string& what) : engine_error(what) {}
};

/// Domain preconditions (unit ideal where proper required, inhomogeneous input, ...).
class domain_error : public engine_error {
 public:
  explicit domain_error(const std::string& what) : engine_error(what) {}
};

/// Internal certificates failed; indicates a bug, never expected in normal operation.
class certification_error : public engine_error {
 public:
  explicit certification_error(const std::string& what) : engine_error(what) {}
};

}  // namespace generica

#endif  // GENERICA_ERRORS_HPP
