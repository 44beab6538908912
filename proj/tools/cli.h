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
#ifndef MEDSEL_TOOLS_CLI_H_
#define MEDSEL_TOOLS_CLI_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "medsel/model.h"
#include "medsel/value.h"

namespace medsel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

// Sweeps switch to the float backend above this K unless --exact is given.
inline constexpr std::int64_t kFloatSweepThreshold = 100'000;

// Runs one invocation; args excludes the program name. Output goes to out,
// diagnostics to err. Returns the process exit code.
int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

enum class SweepVariable { kSeeds, kSubscribers, kCost };

struct SweepSpec {
  SweepVariable variable = SweepVariable::kSeeds;
  MediumIndex medium = 0;  // varied medium for kSubscribers / kCost
  Rational from;
  Rational to;
  Rational step{1};
  GameSetting base{0, {MediumParams{}}};
  Backend backend = Backend::kExact;
  bool force_exact = false;
};

struct SweepRow {
  Rational varied;
  LoadVector loads;
  Value nash_welfare;
  Value optimum_welfare;
  std::optional<Value> poa;
};

// Parses "K", "N<j>" or "gamma<j>" (1-based j). Throws ParseError.
void ParseSweepVariable(const std::string& text, std::size_t num_media, SweepSpec& spec);

// Emits one row per grid point, in grid order. K sweeps run the learning
// mechanism once and read every row off the same trajectory.
void RunSweep(const SweepSpec& spec, const std::function<void(const SweepRow&)>& emit);

// varied,ell_1,...,ell_J,welfare_nash,welfare_opt,poa
std::string SweepCsvHeader(std::size_t num_media);
std::string SweepCsvLine(const SweepRow& row);

}  // namespace medsel::cli

#endif  // MEDSEL_TOOLS_CLI_H_
