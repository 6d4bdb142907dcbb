#ifndef WORDAVOID_ERRORS_HPP
#define WORDAVOID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordavoid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A letter that is not part of the alphabet, or a malformed symbol.
class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// A pattern set where one word occurs inside another.
class NotReducedError : public Error {
 public:
  NotReducedError(std::size_t inner, std::size_t outer, const std::string& what)
      : Error(what), inner_(inner), outer_(outer) {}

  /// Index of the word found inside `outer()`.
  std::size_t inner() const { return inner_; }
  std::size_t outer() const { return outer_; }

 private:
  std::size_t inner_;
  std::size_t outer_;
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(std::size_t column)
      : Error("singular matrix: no nonzero pivot in column " +
              std::to_string(column)),
        column_(column) {}

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wordavoid

#endif  // WORDAVOID_ERRORS_HPP
