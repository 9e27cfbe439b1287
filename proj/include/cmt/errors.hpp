// Copyright 2026 The cmt-bigraph Authors.
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

#ifndef CMT_ERRORS_HPP_
#define CMT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph document. `line()` is 1-based; 0 means "whole document".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The structural theory only covers graphs without isolated vertices.
class IsolatedVertexError : public Error {
 public:
  explicit IsolatedVertexError(const std::string& vertex)
      : Error("isolated vertex '" + vertex +
              "' is outside the structural hypothesis"),
        vertex_(vertex) {}

  const std::string& vertex() const { return vertex_; }

 private:
  std::string vertex_;
};

// An internal invariant failed; always indicates a bug upstream.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a brute-force size guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmt

#endif  // CMT_ERRORS_HPP_
