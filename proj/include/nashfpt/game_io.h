// Copyright 2026 The nashfpt Authors.
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
#ifndef NASHFPT_GAME_IO_H_
#define NASHFPT_GAME_IO_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "nashfpt/game.h"

namespace nashfpt {

// Malformed input file or document: bad JSON, bad rational, wrong shape,
// unknown format version. The message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

// Free-form string metadata (family, seed, parameters).
using Metadata = std::map<std::string, std::string>;

struct GameDocument {
  BimatrixGame game;
  Metadata metadata;
};

struct ProfileDocument {
  MixedProfile profile;
  std::string solver;
  Metadata parameters;
  std::optional<bool> verified;
};

// Game documents are JSON objects
//   {"format": "nashfpt-game", "version": 1, "m": M, "n": N,
//    "A": [...M*N row-major rational strings...], "B": [...],
//    "metadata": {...}}
// where every entry is "p" or "p/q" in lowest terms or not.
GameDocument ParseGame(const std::string& text);
GameDocument ReadGame(const std::string& path);
std::string SerializeGame(const BimatrixGame& game,
                          const Metadata& metadata = {});
void WriteGame(const std::string& path, const BimatrixGame& game,
               const Metadata& metadata = {});

// Profile documents:
//   {"format": "nashfpt-profile", "version": 1, "x": [...], "y": [...],
//    "solver": "...", "parameters": {...}, "verified": true}
ProfileDocument ParseProfile(const std::string& text);
ProfileDocument ReadProfile(const std::string& path);
std::string SerializeProfile(const ProfileDocument& doc);
void WriteProfile(const std::string& path, const ProfileDocument& doc);

std::string ReadFileOrThrow(const std::string& path);
void WriteFileOrThrow(const std::string& path, const std::string& text);

}  // namespace nashfpt

#endif  // NASHFPT_GAME_IO_H_
