#pragma once

#include <stdexcept>
#include <string>

namespace knotforge {

// Maps to CLI exit code 2.
struct BadInput : std::runtime_error {
    explicit BadInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Provably impossible realization request (CLI exit code 3).
struct Impossible : std::runtime_error {
    explicit Impossible(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluator crossing limit or similar resource cap (CLI exit code 4).
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction certificate failed; this is a bug, not a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace knotforge
