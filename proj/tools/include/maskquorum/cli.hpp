// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maskquorum::cli
{

enum ExitCode : int
{
    kOk = 0,
    kFailure = 1,
    kParameterError = 2,
    kSizeError = 3,
    kOracleMismatch = 4,
};

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

} // namespace maskquorum::cli
