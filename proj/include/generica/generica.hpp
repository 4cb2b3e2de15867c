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

#ifndef GENERICA_GENERICA_HPP
#define GENERICA_GENERICA_HPP

#include "commands.hpp"
#include "complex.hpp"
#include "determinantal.hpp"
#include "dimension.hpp"
#include "eagon_northcott.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "field.hpp"
#include "grade.hpp"
#include "groebner.hpp"
#include "ideal_ops.hpp"
#include "koszul.hpp"
#include "matrix.hpp"
#include "modules.hpp"
#include "monomial.hpp"
#include "perturb.hpp"
#include "polynomial.hpp"
#include "regular.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "ring.hpp"
#include "rng.hpp"
#include "session.hpp"
#include "sha256.hpp"
#include "tor_ext.hpp"

#endif  // GENERICA_GENERICA_HPP
