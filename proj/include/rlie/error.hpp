#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlie {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments: non-prime characteristic, dimension mismatch, unknown ids.
struct DomainError : Error {
    using Error::Error;
};

// An enumeration guardrail was hit.
struct BoundExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace rlie
