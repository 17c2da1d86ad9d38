// Copyright (c) 2026 The eventscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eventscope {

// Coarse failure class, used by the CLI to pick an exit code.
enum class ErrorKind {
    Data,     // malformed input, contract violation, bad config
    Numeric,  // numerical failure (singular covariance, repeated collapse, ...)
    Io,       // filesystem / stream failure
};

// Every error carries a stable name ("RangeViolation", "ParseError", ...)
// that tests and callers can match on without parsing the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), kind_(kind), name_(std::move(name)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    static Error data(std::string name, const std::string& message) {
        return Error(ErrorKind::Data, std::move(name), message);
    }
    static Error numeric(std::string name, const std::string& message) {
        return Error(ErrorKind::Numeric, std::move(name), message);
    }
    static Error io(const std::string& message) {
        return Error(ErrorKind::Io, "IoError", message);
    }

private:
    ErrorKind kind_;
    std::string name_;
};

}  // namespace eventscope
