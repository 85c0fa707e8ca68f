#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mahler {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Argument outside the domain where a quantity is defined or convergent.
class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Exact arithmetic left its int64 budget.
class OverflowError : public Error {
public:
    using Error::Error;
};

} // namespace mahler
