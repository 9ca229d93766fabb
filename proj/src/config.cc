// Copyright 2026 The dpredescribe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpr/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>

#include "dpr/text.h"

namespace dpr {
namespace {

double ToDouble(std::string_view key, std::string_view value) {
  const std::optional<double> v = ParseNumber(value);
  if (!v || std::isnan(*v)) {
    throw ConfigError("'" + std::string(key) + "' needs a number, got '" +
                      std::string(value) + "'");
  }
  return *v;
}

std::uint64_t ToUnsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("'" + std::string(key) +
                      "' needs a non-negative integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

bool ToBool(std::string_view key, std::string_view value) {
  const std::string v = ToLower(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + std::string(key) + "' needs true or false, got '" +
                    std::string(value) + "'");
}

}  // namespace

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> keys = {
      "algorithm",   "epsilon",     "intr",
      "rmiter",      "mciter",      "sigma",
      "window",      "depth",       "omega",
      "max_pvalue",  "min_jaccard", "min_support",
      "max_support_fraction",       "seed",
      "prune_threshold",            "no_noise"};
  return keys;
}

ConfigValues ParseConfigText(std::istream& in) {
  ConfigValues values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const std::size_t hash = text.find('#'); hash != text.npos) {
      text = text.substr(0, hash);
    }
    text = Trim(text);
    if (text.empty()) continue;
    const std::size_t eq = text.find('=');
    if (eq == text.npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key(Trim(text.substr(0, eq)));
    const std::string value(Trim(text.substr(eq + 1)));
    const auto& keys = ConfigKeys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
    values[key] = value;
  }
  return values;
}

void ApplyConfigValue(MinerConfig& config, std::string_view key,
                      std::string_view value) {
  if (key == "algorithm") {
    try {
      config.algorithm = ParseAlgorithm(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "epsilon") {
    config.epsilon = ToDouble(key, value);
  } else if (key == "intr") {
    config.intr = ToUnsigned(key, value);
  } else if (key == "rmiter") {
    config.rmiter = ToUnsigned(key, value);
  } else if (key == "mciter") {
    config.mciter = ToUnsigned(key, value);
  } else if (key == "sigma") {
    config.sigma = ToDouble(key, value);
  } else if (key == "window") {
    config.window = ToUnsigned(key, value);
  } else if (key == "depth") {
    const std::uint64_t depth = ToUnsigned(key, value);
    if (depth > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      throw ConfigError("'depth' is out of range");
    }
    config.depth = static_cast<int>(depth);
  } else if (key == "omega") {
    config.omega = ToDouble(key, value);
  } else if (key == "max_pvalue") {
    config.constraints.max_pvalue = ToDouble(key, value);
  } else if (key == "min_jaccard") {
    config.constraints.min_jaccard = ToDouble(key, value);
  } else if (key == "min_support") {
    config.constraints.min_support = ToDouble(key, value);
  } else if (key == "max_support_fraction") {
    config.constraints.max_support_fraction = ToDouble(key, value);
  } else if (key == "seed") {
    config.seed = ToUnsigned(key, value);
  } else if (key == "prune_threshold") {
    config.prune_threshold = ToDouble(key, value);
  } else if (key == "no_noise") {
    config.no_noise = ToBool(key, value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

MinerConfig BuildMinerConfig(const ConfigValues& values) {
  if (!values.contains("epsilon")) {
    throw ConfigError("no privacy budget: set epsilon");
  }
  MinerConfig config;
  for (const std::string& key : ConfigKeys()) {
    if (auto it = values.find(key); it != values.end()) {
      ApplyConfigValue(config, key, it->second);
    }
  }
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

ConfigValues DescribeConfig(const MinerConfig& config) {
  const Constraints& g = config.constraints;
  return {
      {"algorithm", std::string(AlgorithmName(config.algorithm))},
      {"epsilon", FormatNumber(config.epsilon)},
      {"intr", std::to_string(config.intr)},
      {"rmiter", std::to_string(config.rmiter)},
      {"mciter", std::to_string(config.mciter)},
      {"sigma", FormatNumber(config.sigma)},
      {"window", std::to_string(config.window)},
      {"depth", std::to_string(config.depth)},
      {"omega", FormatNumber(config.omega)},
      {"max_pvalue", FormatNumber(g.max_pvalue)},
      {"min_jaccard", FormatNumber(g.min_jaccard)},
      {"min_support", FormatNumber(g.min_support)},
      {"max_support_fraction", FormatNumber(g.max_support_fraction)},
      {"seed", std::to_string(config.seed)},
      {"prune_threshold", FormatNumber(config.prune_threshold)},
      {"no_noise", config.no_noise ? "true" : "false"},
  };
}

}  // namespace dpr
