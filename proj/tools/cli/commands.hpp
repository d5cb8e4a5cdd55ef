// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace spatent::cli {

struct Context {
  const RunConfig& cfg;
  std::string command;
  std::ostream& out;
  std::ostream& err;
};

int cmd_verdict(const Context& ctx);
int cmd_sweep(const Context& ctx);
int cmd_window(const Context& ctx);
int cmd_tc(const Context& ctx);
int cmd_extract(const Context& ctx);
int cmd_selftest(const Context& ctx);

}  // namespace spatent::cli
