// Copyright 2026 The QTS Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qts {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument to an operation (bad index, zero shots, unknown token).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Qubit count or container size outside the supported range.
class SizeError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// A value failed a structural check (non-unitary matrix, malformed circuit).
class ValidationError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// A numeric value outside its admissible domain.
class DomainError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// Not enough data for the requested fit or forecast.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Normalization over a zero-width range.
class DegenerateRangeError : public Error {
public:
    using Error::Error;
};

/// Least-squares design is rank deficient or otherwise unsolvable.
class FitError : public Error {
public:
    using Error::Error;
};

/// Confusion matrix is not invertible.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line number (0 when not tied to a line).
class ParseError : public Error {
public:
    enum class Kind { EmptyFile, MissingHeader, BadCell, BadOp, Io };

    ParseError(Kind kind, std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

}  // namespace qts
