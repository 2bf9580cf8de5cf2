/*
   Copyright 2026 The mldsl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mldsl {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands live in different rings (or rings over different fields).
class RingMismatchError : public Error {
   public:
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

/// Bad argument: unknown variable, minor size out of range, zero input, ...
class DomainError : public Error {
   public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Positioned syntax error from the text front end.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

/// Invalid model input (non-homogeneous equation, too few states, ...).
class ModelError : public Error {
   public:
    explicit ModelError(const std::string& msg) : Error(msg) {}
};

/// A configured pair/term/time budget was exceeded. Never a wrong answer.
class ResourceLimitError : public Error {
   public:
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

/// Quotient-basis size requested for an ideal that is not zero-dimensional.
class NotZeroDimensionalError : public Error {
   public:
    explicit NotZeroDimensionalError(const std::string& msg) : Error(msg) {}
};

/// A randomized data draw produced a degenerate fiber (retryable).
class DegenerateSeedError : public Error {
   public:
    explicit DegenerateSeedError(const std::string& msg) : Error(msg) {}
};

/// The maximum-likelihood degree differed across seeds.
class SeedInstabilityError : public Error {
   public:
    explicit SeedInstabilityError(const std::string& msg) : Error(msg) {}
};

/// A containment that must hold for every valid model failed; this signals
/// an implementation bug, not a model property.
class InvariantViolationError : public Error {
   public:
    explicit InvariantViolationError(const std::string& msg) : Error(msg) {}
};

}  // namespace mldsl
