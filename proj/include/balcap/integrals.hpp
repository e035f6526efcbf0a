// Copyright 2026 The balcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BALCAP_INTEGRALS_HPP
#define BALCAP_INTEGRALS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "balcap/domain.hpp"

namespace balcap {

// Continuous t-norms only; the set is closed.
enum class TNorm { kMin, kProduct, kLukasiewicz };

std::string_view to_string(TNorm tnorm);
std::optional<TNorm> parse_tnorm(std::string_view name);

// Throws Error(kOutOfRange) unless a, b are in [0, 1].
Rational apply_tnorm(TNorm tnorm, const Rational& a, const Rational& b);

// Choquet integral of f >= 0 as the finite layer-cake sum
//   sum_j (v_j - v_{j-1}) * nu({x : f(x) >= v_j}),  v_0 = 0 < v_1 < ... < v_k
// over the distinct values of f. Throws kNegativeFunction, kGroundMismatch.
Rational choquet(const Capacity& nu, const FuncOnX& f);

// max over t in [0,1] of nu(f_t) * t for f in [0, 1], evaluated exactly on
// the candidate levels {0} and the distinct values of f.
// Throws kOutOfRange, kGroundMismatch.
Rational tnorm_integral(const Capacity& nu, const FuncOnX& f, TNorm tnorm);

// Randomized exact checks of the axioms characterizing each integral, over
// `trials` comonotone pairs (f, g) built nondecreasing along a random point
// order, with a random scalar c per trial:
//   choquet:  I(f + g) = I(f) + I(g)  and  I(c f) = c I(f), c >= 0
//   t-normed: I(f v g) = I(f) v I(g)  and  I(c * f) = c * I(f), c in [0, 1]
// Deterministic for a fixed seed.
bool is_comonotone_additive_sample(const Capacity& nu, int trials, std::uint64_t seed = 1);
bool is_comonotone_maxitive_sample(const Capacity& nu, TNorm tnorm, int trials,
                                   std::uint64_t seed = 1);

struct IntegralKind {
  enum class Family { kChoquet, kTNormed } family = Family::kChoquet;
  TNorm tnorm = TNorm::kMin;  // used for kTNormed only
};

// Whether the integral functional of nu (of either kind) is balanced, i.e.
// for every collection with sum l_i chi_{A_i} <= 1 there are phi_i >= chi_{A_i}
// with sum l_i I(phi_i) <= 1. On a finite space chi_{A_i} is itself
// admissible and I(chi_A) = nu(A) for both kinds, so this holds exactly when
// nu is balanced, independent of the kind.
bool balanced_functional(const Capacity& nu, IntegralKind kind);

}  // namespace balcap

#endif  // BALCAP_INTEGRALS_HPP
