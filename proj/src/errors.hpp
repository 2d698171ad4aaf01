// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_ERRORS_HPP
#define IRSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irsec {

/// Thrown when a caller violates an operation's preconditions
/// (dimension mismatch, non-Hermitian input, bad config values, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical routine cannot meet its accuracy contract
/// (eigensolver non-convergence, singular matrix). Carries the offending
/// residual or condition estimate when one is available.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// File-system failures; message includes the path involved.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or schema-violating config input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace irsec

#endif
