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

#include "mogkit/game_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedGame(std::string("invalid JSON: ") + e.what());
  }
}

const json& Field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw MalformedGame(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::size_t ToCount(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw MalformedGame(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> ToCounts(const json& j, const char* what) {
  if (!j.is_array()) throw MalformedGame(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(ToCount(x, what));
  return out;
}

Rational ToRational(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<unsigned long long>()), 10));
    return Rational(mpz_class(std::to_string(j.get<long long>()), 10));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw MalformedGame(e.what());
    }
  }
  throw MalformedGame("numbers must be JSON integers or \"p/q\" strings, got " + j.dump());
}

json FromRational(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(to_string(r));
}

PayoffVector ToVector(const json& j) {
  if (!j.is_array() || j.empty()) throw MalformedGame("vector must be a nonempty array");
  std::vector<Rational> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(ToRational(x));
  return PayoffVector(std::move(v));
}

json FromVector(const PayoffVector& v) {
  json out = json::array();
  for (const auto& c : v.components()) out.push_back(FromRational(c));
  return out;
}

std::vector<PayoffVector> ToVectors(const json& j) {
  if (!j.is_array()) throw MalformedGame("expected an array of vectors");
  std::vector<PayoffVector> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(ToVector(x));
  return out;
}

json FromVectors(const std::vector<PayoffVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(FromVector(v));
  return out;
}

void ExpectKind(const json& root, const char* kind) {
  if (Field(root, "kind") != kind) {
    throw MalformedGame(std::string("expected kind '") + kind + "'");
  }
}

NormalFormGame NormalFromJson(const json& root) {
  const std::size_t n = ToCount(Field(root, "n"), "n");
  const std::size_t d = ToCount(Field(root, "d"), "d");
  auto actions = ToCounts(Field(root, "actions"), "actions");
  if (actions.size() != n) throw MalformedGame("'actions' length differs from n");
  const json& payoffs = Field(root, "payoffs");
  if (!payoffs.is_array()) throw MalformedGame("'payoffs' must be an array");
  std::vector<std::vector<PayoffVector>> tables;
  for (const auto& t : payoffs) tables.push_back(ToVectors(t));
  return NormalFormGame(d, std::move(actions), std::move(tables));
}

SymmetricGame SymmetricFromJson(const json& root) {
  const std::size_t n = ToCount(Field(root, "n"), "n");
  const std::size_t alpha = ToCount(Field(root, "alpha"), "alpha");
  const std::size_t d = ToCount(Field(root, "d"), "d");
  const json& table = Field(root, "table");
  if (!table.is_array()) throw MalformedGame("'table' must be an array");
  std::vector<SymmetricEntry> entries;
  for (const auto& e : table) {
    entries.push_back({ToCount(Field(e, "action"), "action"),
                       ToCounts(Field(e, "config"), "config"),
                       ToVector(Field(e, "payoff"))});
  }
  return SymmetricGame(n, alpha, d, std::move(entries));
}

GraphicalGame GraphicalFromJson(const json& root) {
  const std::size_t n = ToCount(Field(root, "n"), "n");
  const std::size_t d = ToCount(Field(root, "d"), "d");
  auto actions = ToCounts(Field(root, "actions"), "actions");
  if (actions.size() != n) throw MalformedGame("'actions' length differs from n");
  const json& scopes_json = Field(root, "scopes");
  const json& tables_json = Field(root, "tables");
  if (!scopes_json.is_array() || !tables_json.is_array()) {
    throw MalformedGame("'scopes' and 'tables' must be arrays");
  }
  std::vector<std::vector<std::size_t>> scopes;
  for (const auto& s : scopes_json) scopes.push_back(ToCounts(s, "scope"));
  std::vector<std::vector<PayoffVector>> tables;
  for (const auto& t : tables_json) tables.push_back(ToVectors(t));
  return GraphicalGame(d, std::move(actions), std::move(scopes), std::move(tables));
}

}  // namespace

Game game_from_json(std::string_view text) {
  const json root = Parse(text);
  const json& kind = Field(root, "kind");
  try {
    if (kind == "normal") return NormalFromJson(root);
    if (kind == "symmetric") return SymmetricFromJson(root);
    if (kind == "graphical") return GraphicalFromJson(root);
  } catch (const InvalidArgument& e) {
    throw MalformedGame(e.what());
  } catch (const json::exception& e) {
    throw MalformedGame(e.what());
  }
  throw MalformedGame("unknown game kind " + kind.dump());
}

std::string game_to_json(const Game& game) {
  json out = std::visit(
      Overloaded{
          [](const NormalFormGame& g) {
            json j = {{"kind", "normal"}, {"n", g.num_agents()}, {"d", g.dim()},
                      {"actions", g.actions()}};
            j["payoffs"] = json::array();
            for (std::size_t i = 0; i < g.num_agents(); ++i) {
              j["payoffs"].push_back(FromVectors(g.table(i)));
            }
            return j;
          },
          [](const SymmetricGame& g) {
            json j = {{"kind", "symmetric"}, {"n", g.num_agents()},
                      {"alpha", g.alpha()}, {"d", g.dim()}};
            j["table"] = json::array();
            for (const auto& e : g.entries()) {
              j["table"].push_back(
                  {{"action", e.action}, {"config", e.config}, {"payoff", FromVector(e.payoff)}});
            }
            return j;
          },
          [](const GraphicalGame& g) {
            json j = {{"kind", "graphical"}, {"n", g.num_agents()}, {"d", g.dim()},
                      {"actions", g.actions()}, {"scopes", g.scopes()}};
            j["tables"] = json::array();
            for (std::size_t i = 0; i < g.num_agents(); ++i) {
              j["tables"].push_back(FromVectors(g.table(i)));
            }
            return j;
          },
      },
      game);
  return out.dump() + "\n";
}

PotentialAnnotation potential_from_json(std::string_view text) {
  const json root = Parse(text);
  try {
    ExpectKind(root, "potential");
    return PotentialAnnotation(ToCount(Field(root, "d"), "d"),
                               ToCounts(Field(root, "actions"), "actions"),
                               ToVectors(Field(root, "phi")));
  } catch (const InvalidArgument& e) {
    throw MalformedGame(e.what());
  } catch (const json::exception& e) {
    throw MalformedGame(e.what());
  }
}

std::string potential_to_json(const PotentialAnnotation& phi) {
  json j = {{"kind", "potential"}, {"d", phi.dim()}, {"actions", phi.actions()}};
  j["phi"] = FromVectors(phi.values());
  return j.dump() + "\n";
}

MixedProfile mixed_profile_from_json(std::string_view text) {
  const json root = Parse(text);
  const json& profile = Field(root, "profile");
  if (!profile.is_array()) throw MalformedGame("'profile' must be an array");
  std::vector<std::vector<Rational>> dists;
  for (const auto& d : profile) {
    if (!d.is_array()) throw MalformedGame("each distribution must be an array");
    std::vector<Rational> probs;
    for (const auto& p : d) probs.push_back(ToRational(p));
    dists.push_back(std::move(probs));
  }
  try {
    return MixedProfile(std::move(dists));
  } catch (const InvalidArgument& e) {
    throw MalformedGame(e.what());
  }
}

VectorSet vector_set_from_json(std::string_view text, std::string_view key) {
  const json root = Parse(text);
  try {
    if (root.is_array()) return VectorSet(ToVectors(root));
    if (!key.empty() && root.is_object() && root.contains(std::string(key))) {
      return VectorSet(ToVectors(root.at(std::string(key))));
    }
  } catch (const InvalidArgument& e) {
    throw MalformedGame(e.what());
  }
  throw MalformedGame("expected an array of vectors" +
                      (key.empty() ? std::string() : " or a '" + std::string(key) + "' field"));
}

std::string vector_set_to_json(const VectorSet& set) {
  return FromVectors(set.vectors()).dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedGame("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Game load_game(const std::filesystem::path& path) {
  return game_from_json(read_text_file(path));
}

void save_game(const Game& game, const std::filesystem::path& path) {
  write_text_file(path, game_to_json(game));
}

PotentialAnnotation load_potential(const std::filesystem::path& path) {
  return potential_from_json(read_text_file(path));
}

void save_potential(const PotentialAnnotation& phi, const std::filesystem::path& path) {
  write_text_file(path, potential_to_json(phi));
}

}  // namespace mogkit
