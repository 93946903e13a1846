#pragma once

#include <stdexcept>
#include <string>

namespace homjj {

enum class ErrorCode {
    parse,         // malformed scalar/document text
    shape,         // dimension or index mismatch
    domain,        // scalar domains mixed, or unsupported field for an operation
    singular,      // non-invertible matrix where an inverse is required
    precondition,  // operation called on data that fails its stated precondition
    name,          // unknown property, verb, or builtin name
    budget,        // enumeration budget exceeded
    io,            // file read/write failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& message, std::size_t rank)
        : Error(ErrorCode::singular, message + " (rank " + std::to_string(rank) + ")"),
          rank_(rank) {}

    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

}  // namespace homjj
