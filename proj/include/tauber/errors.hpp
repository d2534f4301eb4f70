#pragma once

#include <stdexcept>
#include <string>

namespace tauber {

// Thrown when structured input (problem files, rational literals, CLI
// payloads) cannot be parsed.  Maps to process exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's precondition is violated (bad jet data,
// out-of-range orders, incompatible scalars).  Maps to exit code 3.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

}  // namespace tauber
