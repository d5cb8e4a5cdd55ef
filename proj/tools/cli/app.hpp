// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace spatent::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitNumerical = 2,
  kExitIo = 3,
};

/// Failure to read a configuration file or write an artifact.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entry point shared by main() and the tests. args excludes the program
/// name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace spatent::cli
