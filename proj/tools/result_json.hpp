// Copyright 2026 The mogkit Authors
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

#ifndef MOGKIT_TOOLS_RESULT_JSON_HPP_
#define MOGKIT_TOOLS_RESULT_JSON_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mogkit/game_forms.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit::cli {

// Result documents write every rational as a string so that "3" and "7/2"
// read back identically.
nlohmann::json ToJson(const Rational& r);
nlohmann::json ToJson(const PayoffVector& v);
nlohmann::json ToJson(const VectorSet& s);
nlohmann::json ProfilesJson(const std::vector<Profile>& profiles);

// Two-space indented dump with a trailing newline.
std::string Render(const nlohmann::json& doc);

}  // namespace mogkit::cli

#endif  // MOGKIT_TOOLS_RESULT_JSON_HPP_
