#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lingame {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input that violates a schema or a precondition (bad JSON, shape, range).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A configured operation cap was hit. Carries how far the computation got
/// so callers can report progress instead of a silent partial answer.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t work_done)
        : Error(what), work_done(work_done) {}
    std::uint64_t work_done = 0;
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

/// Iterative numeric routine failed to converge within its cap.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

} // namespace lingame
