// Copyright 2026 The ferrosim Authors. All Rights Reserved.
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

namespace ferro {

// Broad failure classes. The CLI maps them onto process exit codes.
enum class ErrorCategory {
  kConfig,     // invalid input or parameters (exit 2)
  kNumerical,  // non-convergence, blow-up, bracket failure (exit 3)
  kIo,         // filesystem failures (exit 4)
};

const char* to_string(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string code, const std::string& what)
      : std::runtime_error(what), category_(category), code_(std::move(code)) {}

  ErrorCategory category() const noexcept { return category_; }
  // Stable machine-readable identifier, e.g. "E_UNIT".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorCategory category_;
  std::string code_;
};

class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what)
      : Error(ErrorCategory::kConfig, "E_PARAM", what) {}
};

class DegenerateMaterial : public Error {
 public:
  explicit DegenerateMaterial(const std::string& what)
      : Error(ErrorCategory::kConfig, "E_DEGENERATE", what) {}
};

class IntegrationBlowup : public Error {
 public:
  IntegrationBlowup(const std::string& what, double dt)
      : Error(ErrorCategory::kNumerical, "E_BLOWUP", what), dt_(dt) {}
  double dt() const noexcept { return dt_; }

 private:
  double dt_;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double residual)
      : Error(ErrorCategory::kNumerical, "E_NONCONVERGENCE", what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& what)
      : Error(ErrorCategory::kNumerical, "E_INSUFFICIENT_DATA", what) {}
};

class BracketFailure : public Error {
 public:
  BracketFailure(const std::string& what, double lo, double hi)
      : Error(ErrorCategory::kNumerical, "E_BRACKET", what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_, hi_;
};

class RangeGuard : public Error {
 public:
  explicit RangeGuard(const std::string& what)
      : Error(ErrorCategory::kNumerical, "E_RANGE_GUARD", what) {}
};

// Configuration file problems. The code is one of E_PARSE, E_UNIT,
// E_MISSING, E_DUPLICATE, E_UNKNOWN_KEY, E_PARAM; line is 1-based (0 when
// the problem is not tied to a line).
class ConfigError : public Error {
 public:
  ConfigError(std::string code, const std::string& what, std::size_t line = 0)
      : Error(ErrorCategory::kConfig, std::move(code), what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::kIo, "E_IO", what) {}
};

}  // namespace ferro
