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
#ifndef MEDSEL_SETTING_JSON_H_
#define MEDSEL_SETTING_JSON_H_

#include <string>
#include <string_view>

#include "medsel/model.h"

namespace medsel {

// Reads {"K": int, "media": [{"N": int, "gamma": number | "p/q"}, ...]}.
// Numbers are taken at their decimal value, so 0.1 is exactly 1/10.
// Throws ParseError whose message names the offending field.
GameSetting ParseSettingJson(std::string_view text, SettingOptions options = {});

// Inverse of ParseSettingJson; gamma is written as a "p/q" string.
std::string SettingToJson(const GameSetting& setting);

}  // namespace medsel

#endif  // MEDSEL_SETTING_JSON_H_
