// Copyright 2026 The gaglrc Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "gaglrc/cli.hpp"

int main(int argc, char** argv) { return gaglrc::cli::run(argc, argv, std::cout, std::cerr); }
