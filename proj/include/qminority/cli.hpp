// Copyright 2026 The qminority Authors
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

#include <ostream>

namespace qminority {

enum ExitStatus : int { kExitOk = 0, kExitValidationFailure = 1, kExitUsage = 2 };

/// Entry point of the `qminority` command line tool. Subcommands: sweep,
/// validate, compare, best-response, payoff, overlap.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qminority
