// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  return spatent::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
