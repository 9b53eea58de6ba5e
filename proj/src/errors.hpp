#pragma once

#include <stdexcept>
#include <string>

namespace fca {

/// Error category, mirrored by the C API status codes.
enum class ErrorKind {
    invalid_argument,  // malformed input, bad labels, out-of-range indices
    parse,             // unparseable JSON or schema violation
    constraint,        // no solution / verification failure / non-unitary result
    internal,          // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace fca
