// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWALK_ERRORS_H
#define QWALK_ERRORS_H

#include <stdexcept>
#include <string>

namespace qwalk {

/// Parameters outside the mathematical domain of an operation.
/// The CLI maps every DomainError to exit code 2.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonUnitaryCoin : DomainError {
    using DomainError::DomainError;
};

struct AngleOutOfRange : DomainError {
    using DomainError::DomainError;
};

/// Conditional coin state requested at a position the walker never reaches.
struct ZeroWeight : DomainError {
    using DomainError::DomainError;
};

struct DegenerateSuperposition : DomainError {
    using DomainError::DomainError;
};

struct BadDistribution : DomainError {
    using DomainError::DomainError;
};

/// Probability found outside the three USD outcome positions.
struct LeakageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be read or written. The CLI maps it to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProtocolParseError : DomainError {
    ProtocolParseError(int line, const std::string &what)
        : DomainError("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

}  // namespace qwalk

#endif
