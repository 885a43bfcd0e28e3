/* Copyright 2026 The cfpump Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfpump {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grammar text that does not follow the file format.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The start symbol derives no terminal string.
class EmptyLanguage : public Error {
 public:
  using Error::Error;
};

/// The brute-force enumerator visited more sentential forms than allowed.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

class NoDuplicate : public Error {
 public:
  using Error::Error;
};

class CodePathMismatch : public Error {
 public:
  using Error::Error;
};

class PathNotFound : public Error {
 public:
  using Error::Error;
};

class InvalidCode : public Error {
 public:
  using Error::Error;
};

/// Caller-side contract violation of a pumping or tree operation.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed. Always a bug, never a valid outcome.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cfpump
