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

#include "result_json.hpp"

namespace mogkit::cli {

using nlohmann::json;

json ToJson(const Rational& r) { return to_string(r); }

json ToJson(const PayoffVector& v) {
  json out = json::array();
  for (const auto& c : v.components()) out.push_back(ToJson(c));
  return out;
}

json ToJson(const VectorSet& s) {
  json out = json::array();
  for (const auto& v : s) out.push_back(ToJson(v));
  return out;
}

json ProfilesJson(const std::vector<Profile>& profiles) {
  json out = json::array();
  for (const auto& p : profiles) out.push_back(p);
  return out;
}

std::string Render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace mogkit::cli
