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

#include "grg/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "grg/error.hpp"

namespace grg {
namespace {

namespace pt = boost::property_tree;

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  for (char c : value) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty()) items.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) items.push_back(std::move(current));
  return items;
}

// Drops an inline comment: ';' or '#' preceded by whitespace.
std::string strip_inline_comment(std::string value) {
  for (std::size_t i = 1; i < value.size(); ++i) {
    if ((value[i] == ';' || value[i] == '#') && (value[i - 1] == ' ' || value[i - 1] == '\t')) {
      value.erase(i);
      break;
    }
  }
  while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();
  return value;
}

std::string require(const ConfigFile& config, const std::string& section, const std::string& key) {
  auto v = config.get(section, key);
  if (!v) throw ParseError(fmt::format("missing key '{}' in section [{}]", key, section));
  return *v;
}

}  // namespace

ConfigFile ConfigFile::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(fmt::format("config line {}: {}", e.line(), e.message()));
  }
  ConfigFile config;
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      config.sections_[""][name] = strip_inline_comment(node.data());
      continue;
    }
    auto& section = config.sections_[name];
    for (const auto& [key, leaf] : node) section[key] = strip_inline_comment(leaf.data());
  }
  return config;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open config file '{}'", path));
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::optional<std::string> ConfigFile::get(const std::string& section,
                                           const std::string& key) const {
  auto s = sections_.find(section);
  if (s == sections_.end()) return std::nullopt;
  auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  return k->second;
}

bool ConfigFile::has_section(const std::string& section) const {
  return sections_.count(section) != 0;
}

std::vector<std::string> ConfigFile::keys(const std::string& section) const {
  std::vector<std::string> out;
  auto s = sections_.find(section);
  if (s != sections_.end())
    for (const auto& [key, value] : s->second) out.push_back(key);
  return out;
}

void ConfigFile::set(const std::string& section, const std::string& key, std::string value) {
  sections_[section][key] = std::move(value);
}

double parse_real(const std::string& key, const std::string& value) {
  // std::from_chars for double is available in libstdc++ 11.
  double out = 0.0;
  const char* first = value.data();
  const char* last = first + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw ParseError(fmt::format("key '{}': '{}' is not a number", key, value));
  return out;
}

std::int64_t parse_integer(const std::string& key, const std::string& value) {
  std::int64_t out = 0;
  const char* first = value.data();
  const char* last = first + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw ParseError(fmt::format("key '{}': '{}' is not an integer", key, value));
  return out;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* first = value.data();
  const char* last = first + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw ParseError(fmt::format("key '{}': '{}' is not a nonnegative integer", key, value));
  return out;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& item : split_list(value)) out.push_back(parse_real(key, item));
  return out;
}

std::vector<std::int64_t> parse_integer_list(const std::string& key, const std::string& value) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(value)) out.push_back(parse_integer(key, item));
  return out;
}

WeightSpec weight_spec_from_config(const ConfigFile& config, const std::string& section) {
  const std::string family = require(config, section, "family");
  auto real = [&](const std::string& key) {
    return parse_real(key, require(config, section, key));
  };
  if (family == "constant") return WeightSpec::constant(real("value"));
  if (family == "pareto_shifted")
    return WeightSpec::pareto_shifted(real("shape"), real("scale"), real("loc"));
  if (family == "two_point") return WeightSpec::two_point(real("x1"), real("x2"), real("prob_x1"));
  if (family == "empirical")
    return WeightSpec::empirical(parse_real_list("values", require(config, section, "values")),
                                 parse_real_list("probs", require(config, section, "probs")));
  throw ParseError(fmt::format("unknown weight family '{}'", family));
}

}  // namespace grg
