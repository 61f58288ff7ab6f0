// Copyright 2026 The ESL Authors
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

// key = value configuration. Lines starting with '#' are comments. The file
// named by ESL_CONFIG is read when present; flags given on the command line
// override it.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace esl {

class Config {
 public:
  Config() = default;

  /// Throws FormatError on malformed lines or unknown keys.
  static Config parse(std::string_view text);
  static Config load(const std::filesystem::path& path);
  /// Empty config when ESL_CONFIG is unset or empty.
  static Config from_environment();

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  void set(const std::string& key, std::string value);

 private:
  std::map<std::string, std::string> values_;
};

/// Keys accepted in configuration files.
bool is_known_config_key(std::string_view key);

}  // namespace esl
