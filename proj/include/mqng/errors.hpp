// Copyright 2026 The mqng Authors.
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

#include <stdexcept>
#include <string>

namespace mqng {

/// Linear solves or step updates produced non-finite values.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string &msg)
        : std::runtime_error(msg) {}
};

/// Filesystem failures while emitting results.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Invalid command-line flags or flag values.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string &msg) : std::runtime_error(msg) {}
};

// Size and index violations use std::invalid_argument / std::out_of_range.

/// Process exit codes used by the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitIo = 3,
    kExitNumerical = 4,
};

} // namespace mqng
