#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rml {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 1-based line number for text
/// formats and a 0-based byte offset for graph6.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A documented precondition of an operation was violated by its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive operation would exceed its configured work budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::string required)
        : Error(what), required_(std::move(required))
    {
    }
    const std::string& required() const noexcept { return required_; }

private:
    std::string required_;
};

/// Input is larger than the exact algorithm's size cap.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace rml
