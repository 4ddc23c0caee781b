// Copyright 2026 The qtime Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types thrown by the qtime library.
 *
 * Every error derives from qtime::Error. The CLI maps Error to exit status 3
 * and ParseError to exit status 2.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qtime {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Energy levels are not strictly increasing.
class DegeneracyError : public Error {
  public:
    using Error::Error;
};

/// Too few levels, or vectors/matrices of mismatched length.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An index (eigenstate, matrix entry) outside its valid range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Projection onto S annihilated the state (it was parallel to the uniform
/// vector).
class ZeroProjectionError : public Error {
  public:
    using Error::Error;
};

/// log|f| is not integrable because f vanishes identically.
class DivergenceError : public Error {
  public:
    using Error::Error;
};

/// The periodic approximant could not reach the requested tolerance within
/// the denominator cap.
class ApproximationError : public Error {
  public:
    ApproximationError(const std::string &what, double achieved)
        : Error(what), achieved_bound(achieved) {}
    double achieved_bound;
};

/// Malformed or schema-violating input document.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qtime
