// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spatent {

/// Coarse classification used by front ends to pick an exit status.
enum class ErrorCategory { validation, numerical };

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

/// Two mode vectors cannot be combined (different truncation, overlapping
/// regions, commutator residual above the gate).
class InvalidPair : public Error {
 public:
  explicit InvalidPair(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class MalformedCovariance : public Error {
 public:
  explicit MalformedCovariance(const std::string& what)
      : Error(ErrorCategory::numerical, what) {}
};

class UnphysicalState : public Error {
 public:
  explicit UnphysicalState(const std::string& what)
      : Error(ErrorCategory::numerical, what) {}
};

class DegenerateMode : public Error {
 public:
  explicit DegenerateMode(const std::string& what)
      : Error(ErrorCategory::numerical, what) {}
};

class CannotOrthogonalize : public Error {
 public:
  explicit CannotOrthogonalize(const std::string& what)
      : Error(ErrorCategory::numerical, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorCategory::numerical, what) {}
};

}  // namespace spatent
