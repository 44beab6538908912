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
#include "medsel/setting_json.h"

#include <string>
#include <vector>

#include "json.hpp"
#include "medsel/errors.h"

namespace medsel {
namespace {

using Json = nlohmann::ordered_json;

std::int64_t ReadInteger(const Json& node, const std::string& field) {
  if (node.is_number_integer()) return node.get<std::int64_t>();
  if (node.is_number_float()) {
    const double d = node.get<double>();
    const Rational r = RationalFromDecimalDouble(d);
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  }
  throw ParseError(field + ": expected an integer");
}

Rational ReadRational(const Json& node, const std::string& field) {
  try {
    if (node.is_number_integer()) return MakeRational(node.get<std::int64_t>());
    if (node.is_number_unsigned()) return Rational(node.get<std::uint64_t>());
    if (node.is_number_float()) return RationalFromDecimalDouble(node.get<double>());
    if (node.is_string()) return ParseRational(node.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(field + ": " + e.what());
  }
  throw ParseError(field + ": expected a number or a \"p/q\" string");
}

}  // namespace

GameSetting ParseSettingJson(std::string_view text, SettingOptions options) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("setting: expected a JSON object");
  if (!root.contains("K")) throw ParseError("K: missing");
  const std::int64_t seeds = ReadInteger(root["K"], "K");
  if (seeds < 0) throw ParseError("K: must be nonnegative");
  if (!root.contains("media")) throw ParseError("media: missing");
  const Json& media_node = root["media"];
  if (!media_node.is_array()) throw ParseError("media: expected an array");
  if (media_node.empty()) throw ParseError("media: at least one medium is required");

  const std::int64_t min_subscribers = options.allow_zero_subscribers ? 0 : 1;
  std::vector<MediumParams> media;
  media.reserve(media_node.size());
  for (std::size_t j = 0; j < media_node.size(); ++j) {
    const std::string prefix = "media[" + std::to_string(j) + "]";
    const Json& m = media_node[j];
    if (!m.is_object()) throw ParseError(prefix + ": expected an object");
    if (!m.contains("N")) throw ParseError(prefix + ".N: missing");
    if (!m.contains("gamma")) throw ParseError(prefix + ".gamma: missing");
    MediumParams params;
    params.subscribers = ReadInteger(m["N"], prefix + ".N");
    if (params.subscribers < min_subscribers) {
      throw ParseError(prefix + ".N: must be >= " + std::to_string(min_subscribers));
    }
    params.cost = ReadRational(m["gamma"], prefix + ".gamma");
    if (sgn(params.cost) < 0) throw ParseError(prefix + ".gamma: must be nonnegative");
    media.push_back(std::move(params));
  }
  return GameSetting(seeds, std::move(media), options);
}

std::string SettingToJson(const GameSetting& setting) {
  Json root;
  root["K"] = setting.seeds();
  Json media = Json::array();
  for (const MediumParams& m : setting.media()) {
    Json node;
    node["N"] = m.subscribers;
    node["gamma"] = m.cost.get_str();
    media.push_back(std::move(node));
  }
  root["media"] = std::move(media);
  return root.dump();
}

}  // namespace medsel
