#pragma once

#include <stdexcept>
#include <string>

namespace mbd {

/// Malformed caller input (out-of-range vertex, violated precondition, bad file).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation requested on a position/state that does not admit it.
struct StateError : std::runtime_error {
    explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource budget (node limit, vertex cap) was exceeded.
/// Raised instead of returning an approximate answer.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed (e.g. the impossible "second player wins
/// both" outcome). Indicates a bug, not bad input.
struct InconsistencyError : std::logic_error {
    explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace mbd
