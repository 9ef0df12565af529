// Copyright 2026 The grgcycles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRG_CONFIG_HPP_
#define GRG_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grg/weights.hpp"

namespace grg {

// INI-style key/value text with [sections]. Keys before the first section
// header belong to the unnamed section "".
class ConfigFile {
 public:
  static ConfigFile parse(std::string_view text);
  static ConfigFile load(const std::string& path);

  std::optional<std::string> get(const std::string& section, const std::string& key) const;
  bool has_section(const std::string& section) const;
  std::vector<std::string> keys(const std::string& section) const;

  void set(const std::string& section, const std::string& key, std::string value);

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

WeightSpec weight_spec_from_config(const ConfigFile& config, const std::string& section);

// Parsers for scalar and list values; throw ParseError naming the key.
double parse_real(const std::string& key, const std::string& value);
std::int64_t parse_integer(const std::string& key, const std::string& value);
std::uint64_t parse_unsigned(const std::string& key, const std::string& value);
// Whitespace- or comma-separated list.
std::vector<double> parse_real_list(const std::string& key, const std::string& value);
std::vector<std::int64_t> parse_integer_list(const std::string& key, const std::string& value);

}  // namespace grg

#endif  // GRG_CONFIG_HPP_
