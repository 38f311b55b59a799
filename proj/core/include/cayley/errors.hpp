#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad n, rank, literal, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotPrime : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InvalidDegree : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotMonic : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Operands built over different fields, or matrices of different sizes.
class Mismatch : public Error {
public:
    using Error::Error;
};

/// Division by zero or inversion of a singular matrix.
class SingularError : public Error {
public:
    using Error::Error;
};

/// Two distinct vertices were required but the same vertex was given twice.
class SameVertex : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A computed value disagreed with the closed form it is checked against.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit)
        : Error(what + ": requires " + std::to_string(required) + " elements, budget is " +
                std::to_string(limit)),
          required_(required),
          limit_(limit) {}

    [[nodiscard]] std::uint64_t required() const noexcept { return required_; }
    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

}  // namespace cayley
