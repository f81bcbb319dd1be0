// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mukai/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mukai::run(args, std::cout, std::cerr);
}
