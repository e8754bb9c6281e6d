// Copyright 2026 The frobayes Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobayes {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or layout mismatch between tensors.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Numeric precondition violated (non-Hermitian, negative eigenvalue, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Ill-typed diagram composition.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// Reference to an undeclared object or box.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Operation applied to the wrong kind of object (classical vs quantum).
class KindError : public Error {
 public:
  using Error::Error;
};

/// Request outside what the library decides or computes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, SourceSpan span)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + what),
        span_(span) {}

  /// Structural errors in JSON documents are located by path, not position.
  explicit ParseError(const std::string& what) : Error(what) {}

  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace frobayes
