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
#include "nashfpt/game_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nashfpt {
namespace {

using json = nlohmann::json;

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

void CheckHeader(const json& doc, const std::string& format) {
  if (!doc.is_object()) throw InputError("document is not a JSON object");
  if (!doc.contains("format") || doc["format"] != format) {
    throw InputError("field 'format': expected \"" + format + "\"");
  }
  if (!doc.contains("version") || !doc["version"].is_number_integer()) {
    throw InputError("field 'version': missing or not an integer");
  }
  if (doc["version"].get<int>() != kFormatVersion) {
    throw InputError("field 'version': unsupported version " +
                     doc["version"].dump());
  }
}

Vector ParseRationalArray(const json& doc, const std::string& field,
                          std::size_t expected) {
  if (!doc.contains(field) || !doc[field].is_array()) {
    throw InputError("field '" + field + "': missing or not an array");
  }
  const json& arr = doc[field];
  if (expected != static_cast<std::size_t>(-1) && arr.size() != expected) {
    throw InputError("field '" + field + "': expected " +
                     std::to_string(expected) + " entries, found " +
                     std::to_string(arr.size()));
  }
  Vector out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) {
      throw InputError(where + ": expected a rational string");
    }
    try {
      out.push_back(Rational::Parse(arr[i].get<std::string>()));
    } catch (const std::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return out;
}

json RationalArray(const Vector& v) {
  json arr = json::array();
  for (const Rational& r : v) arr.push_back(r.ToString());
  return arr;
}

Metadata ParseMetadata(const json& doc, const std::string& field) {
  Metadata out;
  if (!doc.contains(field)) return out;
  if (!doc[field].is_object()) {
    throw InputError("field '" + field + "': expected an object");
  }
  for (const auto& [key, value] : doc[field].items()) {
    out[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  return out;
}

int ParseDimension(const json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_number_integer() ||
      doc[field].get<long long>() < 1) {
    throw InputError("field '" + field + "': expected a positive integer");
  }
  return doc[field].get<int>();
}

}  // namespace

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileOrThrow(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

GameDocument ParseGame(const std::string& text) {
  const json doc = ParseJson(text);
  CheckHeader(doc, "nashfpt-game");
  const int m = ParseDimension(doc, "m");
  const int n = ParseDimension(doc, "n");
  const std::size_t cells = static_cast<std::size_t>(m) * n;
  Vector a = ParseRationalArray(doc, "A", cells);
  Vector b = ParseRationalArray(doc, "B", cells);
  return {BimatrixGame(Matrix(m, n, std::move(a)), Matrix(m, n, std::move(b))),
          ParseMetadata(doc, "metadata")};
}

GameDocument ReadGame(const std::string& path) {
  try {
    return ParseGame(ReadFileOrThrow(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string SerializeGame(const BimatrixGame& game, const Metadata& metadata) {
  json doc;
  doc["format"] = "nashfpt-game";
  doc["version"] = kFormatVersion;
  doc["m"] = game.rows();
  doc["n"] = game.cols();
  doc["A"] = RationalArray(game.A().data());
  doc["B"] = RationalArray(game.B().data());
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc.dump(1) + "\n";
}

void WriteGame(const std::string& path, const BimatrixGame& game,
               const Metadata& metadata) {
  WriteFileOrThrow(path, SerializeGame(game, metadata));
}

ProfileDocument ParseProfile(const std::string& text) {
  const json doc = ParseJson(text);
  CheckHeader(doc, "nashfpt-profile");
  Vector x = ParseRationalArray(doc, "x", static_cast<std::size_t>(-1));
  Vector y = ParseRationalArray(doc, "y", static_cast<std::size_t>(-1));
  std::optional<MixedProfile> profile;
  try {
    profile.emplace(std::move(x), std::move(y));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("profile: ") + e.what());
  }
  ProfileDocument out{std::move(*profile), "", ParseMetadata(doc, "parameters"),
                      std::nullopt};
  if (doc.contains("solver") && doc["solver"].is_string()) {
    out.solver = doc["solver"].get<std::string>();
  }
  if (doc.contains("verified") && doc["verified"].is_boolean()) {
    out.verified = doc["verified"].get<bool>();
  }
  return out;
}

ProfileDocument ReadProfile(const std::string& path) {
  try {
    return ParseProfile(ReadFileOrThrow(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string SerializeProfile(const ProfileDocument& d) {
  json doc;
  doc["format"] = "nashfpt-profile";
  doc["version"] = kFormatVersion;
  doc["x"] = RationalArray(d.profile.x());
  doc["y"] = RationalArray(d.profile.y());
  doc["solver"] = d.solver;
  doc["parameters"] = d.parameters;
  if (d.verified) doc["verified"] = *d.verified;
  return doc.dump(1) + "\n";
}

void WriteProfile(const std::string& path, const ProfileDocument& doc) {
  WriteFileOrThrow(path, SerializeProfile(doc));
}

}  // namespace nashfpt
