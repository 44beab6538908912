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
#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "medsel/analysis.h"
#include "medsel/errors.h"
#include "medsel/setting_json.h"
#include "medsel/solvers.h"

namespace medsel::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kCsvDigits = 12;

Json ToJson(const Value& v) {
  if (v.is_exact()) return v.exact().get_str();
  return v.ToDouble();
}

Json ToJson(const std::optional<Value>& v) { return v ? ToJson(*v) : Json(nullptr); }

Json ToJson(const LoadVector& l) {
  Json arr = Json::array();
  for (std::int64_t x : l.values()) arr.push_back(x);
  return arr;
}

std::string ToCsv(const Value& v) {
  return v.is_exact() ? FormatDecimal(v.exact(), kCsvDigits)
                      : FormatDecimal(v.ToDouble(), kCsvDigits);
}

std::string ToCsv(const std::optional<Value>& v) { return v ? ToCsv(*v) : std::string(); }

std::string LoadsHeader(std::size_t num_media) {
  std::string header;
  for (std::size_t j = 1; j <= num_media; ++j) {
    if (j > 1) header += ',';
    header += "ell_" + std::to_string(j);
  }
  return header;
}

std::string LoadsCsv(const LoadVector& l) {
  std::string line;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (j > 0) line += ',';
    line += std::to_string(l[j]);
  }
  return line;
}

std::int64_t ToInteger(const Rational& r, const std::string& what) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
    throw ParseError(what + " must be an integer, got " + r.get_str());
  }
  return r.get_num().get_si();
}

// Options shared by the subcommands that read a game setting.
struct SettingOptionsCli {
  std::string config_path;
  std::string inline_json;
  std::optional<std::int64_t> seeds;
  bool allow_zero_subscribers = false;
  std::string format = "json";
  std::string backend = "exact";
  bool force_exact = false;
};

void AddSettingOptions(CLI::App* sub, SettingOptionsCli& opts) {
  auto* config = sub->add_option("-c,--config", opts.config_path, "Setting JSON file");
  auto* inline_opt = sub->add_option("--inline", opts.inline_json, "Setting JSON text");
  config->excludes(inline_opt);
  sub->add_option("-K,--seeds", opts.seeds, "Override the number of seeds K")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--allow-zero-subscribers", opts.allow_zero_subscribers,
                "Accept media with N = 0");
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--backend", opts.backend, "Numeric backend")
      ->check(CLI::IsMember({"exact", "float"}));
}

GameSetting LoadSetting(const SettingOptionsCli& opts) {
  std::string text;
  if (!opts.inline_json.empty()) {
    text = opts.inline_json;
  } else if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) throw ParseError("cannot read config file '" + opts.config_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    throw ParseError("a setting is required (--config FILE or --inline JSON)");
  }
  GameSetting setting = ParseSettingJson(
      text, SettingOptions{.allow_zero_subscribers = opts.allow_zero_subscribers});
  if (opts.seeds) setting = setting.WithSeeds(*opts.seeds);
  return setting;
}

Backend ParseBackend(const std::string& name) {
  return name == "float" ? Backend::kFloat : Backend::kExact;
}

void WriteJson(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void Solve(const SettingOptionsCli& opts, const std::string& algorithm,
           const std::vector<std::int64_t>& start, std::ostream& out) {
  const GameSetting setting = LoadSetting(opts);
  const Backend backend = ParseBackend(opts.backend);
  LoadVector load;
  if (algorithm == "order") {
    load = OrderLearningLoad(setting, backend);
  } else if (algorithm == "sd") {
    load = SdMax(setting, backend);
  } else if (algorithm == "scaling") {
    load = ScalingDescent(setting, backend);
  } else if (algorithm == "brute") {
    load = BruteForceEquilibria(setting, EnumerationBudgetFromEnv()).members.front();
  } else {
    const LoadVector from = start.empty()
                                ? LoadVector::Concentrated(setting.num_media(), 0, setting.seeds())
                                : LoadVector(start);
    load = BestResponseDynamics(setting, from);
  }
  const Value potential = Potential(setting, load, backend);
  if (opts.format == "csv") {
    out << LoadsHeader(setting.num_media()) << ",potential\n";
    out << LoadsCsv(load) << ',' << ToCsv(potential) << '\n';
    return;
  }
  Json j;
  j["algorithm"] = algorithm;
  j["loads"] = ToJson(load);
  j["potential"] = ToJson(potential);
  if (backend == Backend::kExact) j["is_nash"] = IsNash(setting, load);
  WriteJson(out, j);
}

void WriteEquilibria(const GameSetting& setting, const EquilibriumSet& eq,
                     const std::string& format, std::ostream& out, Json extra = Json::object()) {
  if (format == "csv") {
    out << LoadsHeader(setting.num_media()) << '\n';
    for (const LoadVector& l : eq.members) out << LoadsCsv(l) << '\n';
    return;
  }
  Json j = std::move(extra);
  j["potential"] = ToJson(eq.potential);
  j["count"] = eq.members.size();
  Json members = Json::array();
  for (const LoadVector& l : eq.members) members.push_back(ToJson(l));
  j["equilibria"] = std::move(members);
  WriteJson(out, j);
}

void Enumerate(const SettingOptionsCli& opts, std::ostream& out) {
  const GameSetting setting = LoadSetting(opts);
  WriteEquilibria(setting, EnumerateEquilibria(setting), opts.format, out);
}

void Learn(const SettingOptionsCli& opts, std::ostream& out) {
  const GameSetting setting = LoadSetting(opts);
  const LearningTrace trace = OrderLearning(setting, ParseBackend(opts.backend));
  if (opts.format == "csv") {
    out << "k,chosen,marginal," << LoadsHeader(setting.num_media()) << '\n';
    LoadVector loads = LoadVector::Zero(setting.num_media());
    for (std::size_t k = 0; k < trace.chosen.size(); ++k) {
      loads = loads.PlusUnit(trace.chosen[k]);
      out << (k + 1) << ',' << (trace.chosen[k] + 1) << ',' << ToCsv(trace.marginals[k])
          << ',' << LoadsCsv(loads) << '\n';
    }
    return;
  }
  Json chosen = Json::array();
  for (MediumIndex c : trace.chosen) chosen.push_back(c + 1);
  Json marginals = Json::array();
  for (const Value& m : trace.marginals) marginals.push_back(ToJson(m));
  Json j;
  j["chosen"] = std::move(chosen);
  j["marginals"] = std::move(marginals);
  j["final"] = ToJson(trace.final_load);
  WriteJson(out, j);
}

void Welfare(const SettingOptionsCli& opts, std::ostream& out) {
  const GameSetting setting = LoadSetting(opts);
  const WelfareReport r = PriceOfAnarchy(setting, ParseBackend(opts.backend));
  if (opts.format == "csv") {
    const std::string ells = LoadsHeader(setting.num_media());
    out << "kind," << ells << ",welfare\n";
    out << "nash," << LoadsCsv(r.nash_load) << ',' << ToCsv(r.nash_welfare) << '\n';
    out << "optimum," << LoadsCsv(r.optimum_load) << ',' << ToCsv(r.optimum_welfare) << '\n';
    out << "poa,," << std::string(setting.num_media() - 1, ',') << ToCsv(r.poa) << '\n';
    return;
  }
  Json j;
  j["nash_load"] = ToJson(r.nash_load);
  j["nash_welfare"] = ToJson(r.nash_welfare);
  j["optimum_load"] = ToJson(r.optimum_load);
  j["optimum_welfare"] = ToJson(r.optimum_welfare);
  j["poa"] = ToJson(r.poa);
  WriteJson(out, j);
}

void Predict(const SettingOptionsCli& opts, std::ostream& out) {
  const GameSetting setting = LoadSetting(opts);
  const AsymptoticPrediction p = PredictAsymptotics(setting);
  if (opts.format == "csv") {
    out << "medium,group,plateau,share\n";
    for (MediumIndex j = 0; j < setting.num_media(); ++j) {
      const auto plateau = p.plateaus.find(j);
      const auto share = p.shares.find(j);
      out << (j + 1) << ',' << (share != p.shares.end() ? "G" : "") << ','
          << (plateau != p.plateaus.end() ? std::to_string(plateau->second) : "") << ','
          << (share != p.shares.end() ? FormatDecimal(share->second, kCsvDigits) : "")
          << '\n';
    }
    return;
  }
  Json group = Json::array();
  for (MediumIndex w : p.min_cost_group) group.push_back(w + 1);
  Json plateaus = Json::object();
  for (const auto& [j, value] : p.plateaus) plateaus[std::to_string(j + 1)] = value;
  Json shares = Json::object();
  for (const auto& [w, value] : p.shares) shares[std::to_string(w + 1)] = value.get_str();
  Json j;
  j["gamma_min"] = p.gamma_min.get_str();
  j["G"] = std::move(group);
  j["plateaus"] = std::move(plateaus);
  j["shares"] = std::move(shares);
  WriteJson(out, j);
}

void Tight(std::int64_t num_media, std::int64_t subscribers, const std::string& gamma,
           const std::string& format, std::ostream& out) {
  const GameSetting setting = TightInstance(num_media, subscribers, ParseRational(gamma));
  const EquilibriumSet eq = EnumerateEquilibria(setting);
  const std::uint64_t bound = EquilibriumBound(num_media);
  bool zero_one = true;
  for (const LoadVector& l : eq.members) {
    for (std::int64_t v : l.values()) zero_one = zero_one && v <= 1;
  }
  Json extra;
  extra["setting"] = Json::parse(SettingToJson(setting));
  extra["bound"] = bound;
  extra["verified"] = zero_one && eq.members.size() == bound;
  WriteEquilibria(setting, eq, format, out, std::move(extra));
}

struct SweepCli {
  std::string variable = "K";
  std::string from;
  std::string to;
  std::string step = "1";
};

void Sweep(const SettingOptionsCli& opts, const SweepCli& sweep, std::ostream& out) {
  SweepSpec spec;
  spec.base = LoadSetting(opts);
  ParseSweepVariable(sweep.variable, spec.base.num_media(), spec);
  spec.from = ParseRational(sweep.from);
  spec.to = ParseRational(sweep.to);
  spec.step = ParseRational(sweep.step);
  spec.backend = ParseBackend(opts.backend);
  spec.force_exact = opts.force_exact;

  if (opts.format == "csv") {
    out << SweepCsvHeader(spec.base.num_media()) << '\n';
    RunSweep(spec, [&](const SweepRow& row) { out << SweepCsvLine(row) << '\n'; });
    return;
  }
  Json rows = Json::array();
  RunSweep(spec, [&](const SweepRow& row) {
    Json j;
    j["varied"] = row.varied.get_str();
    j["loads"] = ToJson(row.loads);
    j["welfare_nash"] = ToJson(row.nash_welfare);
    j["welfare_opt"] = ToJson(row.optimum_welfare);
    j["poa"] = ToJson(row.poa);
    rows.push_back(std::move(j));
  });
  WriteJson(out, rows);
}

}  // namespace

void ParseSweepVariable(const std::string& text, std::size_t num_media, SweepSpec& spec) {
  if (text == "K") {
    spec.variable = SweepVariable::kSeeds;
    return;
  }
  std::string digits;
  if (text.rfind("gamma", 0) == 0) {
    spec.variable = SweepVariable::kCost;
    digits = text.substr(5);
  } else if (text.rfind("N", 0) == 0) {
    spec.variable = SweepVariable::kSubscribers;
    digits = text.substr(1);
  } else {
    throw ParseError("--var must be K, N<j> or gamma<j>, got '" + text + "'");
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("--var: missing medium index in '" + text + "'");
  }
  const std::size_t j = std::stoul(digits);
  if (j < 1 || j > num_media) {
    throw ParseError("--var: medium " + digits + " out of range 1.." +
                     std::to_string(num_media));
  }
  spec.medium = j - 1;
}

void RunSweep(const SweepSpec& spec, const std::function<void(const SweepRow&)>& emit) {
  if (sgn(spec.step) <= 0) throw ParseError("--step must be positive");
  if (spec.from > spec.to) throw ParseError("--from must not exceed --to");
  std::vector<Rational> grid;
  for (Rational v = spec.from; v <= spec.to; v += spec.step) grid.push_back(v);

  const auto backend_for = [&](std::int64_t seeds) {
    if (spec.backend == Backend::kExact && !spec.force_exact &&
        seeds > kFloatSweepThreshold) {
      return Backend::kFloat;
    }
    return spec.backend;
  };

  if (spec.variable == SweepVariable::kSeeds) {
    std::vector<std::int64_t> seeds;
    for (const Rational& v : grid) {
      seeds.push_back(ToInteger(v, "K"));
      if (seeds.back() < 0) throw ParseError("K must be nonnegative");
    }
    const Backend backend = backend_for(seeds.back());
    LoadVector loads = LoadVector::Zero(spec.base.num_media());
    std::int64_t current = 0;
    for (std::int64_t k : seeds) {
      for (; current < k; ++current) {
        loads = AddSeed(spec.base.WithSeeds(current), loads, backend);
      }
      const GameSetting setting = spec.base.WithSeeds(k);
      const WelfareReport r = WelfareFromEquilibrium(setting, loads, backend);
      emit(SweepRow{MakeRational(k), loads, r.nash_welfare, r.optimum_welfare, r.poa});
    }
    return;
  }

  for (const Rational& v : grid) {
    std::vector<MediumParams> media(spec.base.media().begin(), spec.base.media().end());
    if (spec.variable == SweepVariable::kSubscribers) {
      media[spec.medium].subscribers = ToInteger(v, "N");
    } else {
      media[spec.medium].cost = v;
    }
    const GameSetting setting(spec.base.seeds(), std::move(media), spec.base.options());
    const Backend backend = backend_for(setting.seeds());
    const LoadVector learned = OrderLearningLoad(setting, backend);
    const WelfareReport r = WelfareFromEquilibrium(setting, learned, backend);
    emit(SweepRow{v, learned, r.nash_welfare, r.optimum_welfare, r.poa});
  }
}

std::string SweepCsvHeader(std::size_t num_media) {
  return "varied," + LoadsHeader(num_media) + ",welfare_nash,welfare_opt,poa";
}

std::string SweepCsvLine(const SweepRow& row) {
  return FormatDecimal(row.varied, kCsvDigits) + ',' + LoadsCsv(row.loads) + ',' +
         ToCsv(row.nash_welfare) + ',' + ToCsv(row.optimum_welfare) + ',' + ToCsv(row.poa);
}

int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of the social-medium selection congestion game", "medsel"};
  app.require_subcommand(1);

  SettingOptionsCli opts;
  std::string algorithm = "order";
  std::vector<std::int64_t> start;
  SweepCli sweep;
  std::int64_t tight_media = 4;
  std::int64_t tight_subscribers = 5;
  std::string tight_gamma = "1";
  std::string tight_format = "json";

  auto* solve = app.add_subcommand("solve", "Compute one equilibrium load and its potential");
  AddSettingOptions(solve, opts);
  solve->add_option("--algo", algorithm, "order | sd | scaling | brute | br")
      ->check(CLI::IsMember({"order", "sd", "scaling", "brute", "br"}));
  solve->add_option("--start", start, "Start load for br, comma separated")->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "List every equilibrium load");
  AddSettingOptions(enumerate, opts);

  auto* learn = app.add_subcommand("learn", "Trace the seed-by-seed learning mechanism");
  AddSettingOptions(learn, opts);

  auto* welfare = app.add_subcommand("welfare", "Worst-equilibrium welfare, optimum, PoA");
  AddSettingOptions(welfare, opts);

  auto* predict = app.add_subcommand("predict", "Large-K plateaus and market shares");
  AddSettingOptions(predict, opts);

  auto* sweep_cmd = app.add_subcommand("sweep", "Equilibria and welfare over a grid");
  AddSettingOptions(sweep_cmd, opts);
  sweep_cmd->add_option("--var", sweep.variable, "K, N<j> or gamma<j> (1-based j)");
  sweep_cmd->add_option("--from", sweep.from, "First grid value")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last grid value (inclusive)")->required();
  sweep_cmd->add_option("--step", sweep.step, "Grid step (p/q allowed)");
  sweep_cmd->add_flag("--exact", opts.force_exact, "Keep exact arithmetic for K > 1e5");

  auto* tight = app.add_subcommand("tight", "Instance attaining the equilibrium-count bound");
  tight->add_option("-J,--media", tight_media, "Number of media (>= 2)");
  tight->add_option("-m,--subscribers", tight_subscribers, "Subscribers per medium");
  tight->add_option("--gamma", tight_gamma, "Common cost (p/q allowed)");
  tight->add_option("--format", tight_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  // Sweeps default to CSV.
  if (sweep_cmd->parsed() && sweep_cmd->count("--format") == 0) opts.format = "csv";

  try {
    if (solve->parsed()) {
      Solve(opts, algorithm, start, out);
    } else if (enumerate->parsed()) {
      Enumerate(opts, out);
    } else if (learn->parsed()) {
      Learn(opts, out);
    } else if (welfare->parsed()) {
      Welfare(opts, out);
    } else if (predict->parsed()) {
      Predict(opts, out);
    } else if (sweep_cmd->parsed()) {
      Sweep(opts, sweep, out);
    } else if (tight->parsed()) {
      Tight(tight_media, tight_subscribers, tight_gamma, tight_format, out);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace medsel::cli
