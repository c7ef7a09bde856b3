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

// JSON files for games, potential sidecars, mixed profiles and vector sets.
//
//   normal:    {"kind":"normal","n":N,"d":D,"actions":[..],"payoffs":[[vec..]..]}
//   symmetric: {"kind":"symmetric","n":N,"alpha":A,"d":D,
//               "table":[{"action":a,"config":[..],"payoff":vec}..]}
//   graphical: {"kind":"graphical","n":N,"d":D,"actions":[..],"scopes":[[..]..],
//               "tables":[[vec..]..]}
//   potential: {"kind":"potential","d":D,"actions":[..],"phi":[vec..]}
//   mixed:     {"profile":[[p..]..]}
//
// A vec is an array of numbers; each number is a JSON integer or a string
// "p/q". Writers emit integers as JSON integers and fractions as strings.

#ifndef MOGKIT_GAME_IO_HPP_
#define MOGKIT_GAME_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "mogkit/game_forms.hpp"
#include "mogkit/mixed.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit {

// All readers throw MalformedGame with a description of the first problem.
Game game_from_json(std::string_view text);
std::string game_to_json(const Game& game);

PotentialAnnotation potential_from_json(std::string_view text);
std::string potential_to_json(const PotentialAnnotation& phi);

MixedProfile mixed_profile_from_json(std::string_view text);

// Accepts a bare array of vectors, or an object holding such an array under
// `key` (e.g. the "wstE" or "F" field of a solve result).
VectorSet vector_set_from_json(std::string_view text, std::string_view key = {});
std::string vector_set_to_json(const VectorSet& set);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Game load_game(const std::filesystem::path& path);
void save_game(const Game& game, const std::filesystem::path& path);
PotentialAnnotation load_potential(const std::filesystem::path& path);
void save_potential(const PotentialAnnotation& phi, const std::filesystem::path& path);

}  // namespace mogkit

#endif  // MOGKIT_GAME_IO_HPP_
