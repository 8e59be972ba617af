#pragma once

#include <stdexcept>
#include <string>

namespace polylock {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cell set that is not a valid polyomino (empty, duplicated or disconnected).
class InvalidShape : public Error {
 public:
  using Error::Error;
};

// A structural invariant was violated, e.g. overlapping placements or a
// planner that produced a plan its own simulator rejects.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class UnknownPiece : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a numeric or combinatorial operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PlanError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  // 1-based line number in the input text; 0 when not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace polylock
