// Copyright 2026 The medsel Authors
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
#ifndef MEDSEL_SOLVERS_H_
#define MEDSEL_SOLVERS_H_

#include <cstdint>
#include <vector>

#include "medsel/mconcavity.h"
#include "medsel/model.h"
#include "medsel/value.h"

namespace medsel {

// Every argmax over media breaks ties towards the lowest index.

// Default cap on |D| = C(K + J - 1, J - 1) for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Reads MEDIUM_SELECT_BUDGET, falling back to kDefaultEnumerationBudget.
std::uint64_t EnumerationBudgetFromEnv();

// C(K + J - 1, J - 1), saturating at UINT64_MAX.
std::uint64_t DomainSize(std::size_t num_media, std::int64_t seeds);

// Lower-bound certificates of the modified steepest ascent: a maximizer
// exists among loads l with l_j >= b_j.
struct ActiveBounds {
  std::vector<std::int64_t> b;
};

struct SdMaxResult {
  LoadVector load;
  ActiveBounds bounds;
  std::int64_t iterations = 0;
};

// Arrival-by-arrival record of the learning mechanism.
struct LearningTrace {
  std::vector<MediumIndex> chosen;  // medium picked by seed k
  std::vector<Value> marginals;     // the maximal marginal it attained
  LoadVector final_load;
};

struct EquilibriumSet {
  std::vector<LoadVector> members;  // sorted lexicographically
  Value potential;                  // shared by every member
};

// Guided best response on load vectors: move to the best neighbor while it
// strictly increases the potential. Exact arithmetic.
LoadVector BestResponseDynamics(const GameSetting& setting, const LoadVector& start);

// Modified steepest ascent from K e_1 with active lower bounds. The argmax at
// each step is over the marginals of l - e_u, which is what maximizing
// f(l - e_u + e_t) over t reduces to (the t = u term is N_u/l_u - gamma_u).
SdMaxResult SdMaxWithStats(const GameSetting& setting,
                           Backend backend = Backend::kExact);
LoadVector SdMax(const GameSetting& setting, Backend backend = Backend::kExact);

// Seeds arrive one at a time and each picks a medium of maximal marginal.
LearningTrace OrderLearning(const GameSetting& setting,
                            Backend backend = Backend::kExact);

// Final load of OrderLearning without materializing the trace.
LoadVector OrderLearningLoad(const GameSetting& setting,
                             Backend backend = Backend::kExact);

// Loads after each arrival: element k is the equilibrium load with k seeds,
// for k = 0..K.
std::vector<LoadVector> OrderLearningPrefixes(const GameSetting& setting,
                                              Backend backend = Backend::kExact);

// eq + e_w for the lowest w maximizing the marginal at eq. If eq is an
// equilibrium with K seeds the result is one with K + 1 seeds.
LoadVector AddSeed(const GameSetting& setting, const LoadVector& eq,
                   Backend backend = Backend::kExact);

// Scaled steepest ascent: phases with alpha = 2^p, ..., 2, 1 where
// 2^p <= max(1, K/J) < 2^(p+1). Each phase maximizes y -> f(x + alpha y) over
// the current box and the box is then shrunk to the proximity radius
// (J - 1)(alpha - 1) around the phase optimum.
LoadVector ScalingDescent(const GameSetting& setting,
                          Backend backend = Backend::kExact);

// A y with sum(y) = 0 and ceil((m_j - x_j)/alpha) <= y_j <= floor((M_j - x_j)/alpha).
// Starts from the lower bounds and raises coordinates in index order.
// Throws InfeasibleError when no such y exists.
IntVector FindVectorInBounds(const LoadVector& x, const IntVector& lower,
                             const IntVector& upper, std::int64_t alpha);

// All global maximizers of the potential, by scanning D in lexicographic
// order. Throws CapacityError when |D| > budget.
EquilibriumSet BruteForceEquilibria(const GameSetting& setting,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

// Equilibria within Chebyshev distance 1 of a known equilibrium: the loads
// center + d, d in {-1,0,1}^J with sum(d) = 0, whose potential equals that of
// center. Sorted lexicographically.
std::vector<LoadVector> EquilibriumBall(const GameSetting& setting,
                                        const LoadVector& center);

// The full equilibrium set: an OrderLearning equilibrium plus its ball.
EquilibriumSet EnumerateEquilibria(const GameSetting& setting);

}  // namespace medsel

#endif  // MEDSEL_SOLVERS_H_
