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

#ifndef DPR_TEXT_H_
#define DPR_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpr {

// Shortest representation that parses back to the identical double.
std::string FormatNumber(double value);
// Parses the whole of `text` as a double; nullopt on any leftover input.
std::optional<double> ParseNumber(std::string_view text);

std::string_view Trim(std::string_view text);
std::vector<std::string_view> SplitOn(std::string_view text, char delimiter);
std::string ToLower(std::string_view text);

}  // namespace dpr

#endif  // DPR_TEXT_H_
