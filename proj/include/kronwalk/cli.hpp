// Copyright 2026 The kronwalk Authors
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

#include <iosfwd>
#include <string>

namespace kronwalk::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitNumeric = 4;

/// Largest |p_dense - p_reduced| accepted by `validate`.
inline constexpr double kValidationThreshold = 1e-6;

/// Runs the command line `argv[0] <subcommand> ...`. Results go to `out` (or
/// the --output file), diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fixed real formatting used in every emitted table: 17 significant digits,
/// '.' as decimal separator.
std::string format_real(double value);

}  // namespace kronwalk::cli
