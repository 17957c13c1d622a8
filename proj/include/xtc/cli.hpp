/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

namespace xtc {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 2 validation error, 3 size limit.
int run_cli(const std::vector<std::string>& args);

}  // namespace xtc
