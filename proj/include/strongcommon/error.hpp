#pragma once

#include <stdexcept>
#include <string>

namespace strongcommon {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, edge lists, rationals, certificate JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (bad vertex, adjacent pair, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace strongcommon
