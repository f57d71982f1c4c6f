// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace spheremetric {

/// Rejected input: a precondition on arguments or image shape was violated.
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dataset-level failure: unreadable directory, empty scan, decode failure,
/// aspect-ratio violation in strict mode.
class DatasetError : public std::runtime_error {
public:
    explicit DatasetError(const std::string& what) : std::runtime_error(what) {}
};

/// Feature-backend failure: missing or corrupt model file, unsupported backend.
class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric failure: eigensolver did not converge, non-finite intermediate,
/// distance more negative than numeric tolerance allows.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spheremetric
