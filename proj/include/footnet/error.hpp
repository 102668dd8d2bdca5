#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace footnet {

// Malformed or missing input data. Carries the 1-based data row and the
// offending field name when the failure can be pinned to a cell.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
  InputError(const std::string& what, std::size_t row, std::string field)
      : std::runtime_error(what + " (row " + std::to_string(row) + ", field " + field + ")"),
        row_(row),
        field_(std::move(field)) {}

  std::size_t row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t row_ = 0;
  std::string field_;
};

// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace footnet
