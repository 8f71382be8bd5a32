// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "socnav/cli.hpp"

int main(int argc, char** argv) { return socnav::run_cli(argc, argv, std::cout, std::cerr); }
