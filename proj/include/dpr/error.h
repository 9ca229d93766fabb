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

#ifndef DPR_ERROR_H_
#define DPR_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpr {

// Malformed input text (data files, query strings, result files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
  // `row` is 1-based, counting every physical line of the input.
  ParseError(const std::string& what, std::size_t row)
      : std::runtime_error("row " + std::to_string(row) + ": " + what),
        row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_ = 0;
};

// Attribute declarations that violate the data model.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A charge would push the accountant past its total budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

// An attribute with no observed values cannot seed a target.
class DegenerateAttributeError : public std::runtime_error {
 public:
  explicit DegenerateAttributeError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dpr

#endif  // DPR_ERROR_H_
