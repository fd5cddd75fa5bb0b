#ifndef COLORTREE_ERRORS_HPP
#define COLORTREE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colortree {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's documented domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

// An exact division that should have been exact was not. Always a bug.
class IntegralityViolation : public Error {
  public:
    using Error::Error;
};

// Malformed canonical tree encoding. `offset()` is the byte where parsing failed.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

// Edge color outside 1..d, or repeated at one vertex.
class ColorError : public Error {
  public:
    using Error::Error;
};

// Child edges of a vertex not listed in strictly ascending color order.
class ColorOrderError : public ColorError {
  public:
    using ColorError::ColorError;
};

// Requested work exceeds a configured cap (enumeration size, series order, profile total).
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

// Fixed-point iteration failed to stabilise. Always a bug.
class NonConvergence : public Error {
  public:
    using Error::Error;
};

// Root finder could not meet the residual contract.
class RootFindingFailure : public Error {
  public:
    RootFindingFailure(const std::string& what, double best_residual)
        : Error(what), best_residual_(best_residual) {}
    double best_residual() const noexcept { return best_residual_; }

  private:
    double best_residual_;
};

// Closed-form root formula undefined at this point (g1 * g2 == 0).
class DegenerateError : public Error {
  public:
    using Error::Error;
};

}  // namespace colortree

#endif  // COLORTREE_ERRORS_HPP
