// Copyright 2026 The pgnet Authors
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

#ifndef PGNET_ERROR_HPP_
#define PGNET_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgnet {

// Caller passed something outside the documented domain (self-loop, bad
// parameters, mismatched histograms). Maps to the CLI usage exit code.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph file. `line()` is 1-based.
class ParseError : public IoError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : IoError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Non-finite intermediates, root-finding inconsistencies and degenerate
// estimator inputs.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class McmcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgnet

#endif  // PGNET_ERROR_HPP_
