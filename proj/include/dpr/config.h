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

// Flat "key = value" run configuration. Keys mirror MinerConfig fields;
// '#' starts a comment.

#ifndef DPR_CONFIG_H_
#define DPR_CONFIG_H_

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpr/mine.h"

namespace dpr {

// Unknown keys, malformed lines and unusable values.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

using ConfigValues = std::map<std::string, std::string, std::less<>>;

const std::vector<std::string>& ConfigKeys();
// Later lines win over earlier ones.
ConfigValues ParseConfigText(std::istream& in);
void ApplyConfigValue(MinerConfig& config, std::string_view key,
                      std::string_view value);
// Applies every entry and validates the result. `epsilon` must be present.
MinerConfig BuildMinerConfig(const ConfigValues& values);
// Every key with its current value.
ConfigValues DescribeConfig(const MinerConfig& config);

}  // namespace dpr

#endif  // DPR_CONFIG_H_
