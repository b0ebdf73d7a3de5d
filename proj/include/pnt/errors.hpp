#pragma once

#include <stdexcept>
#include <string>

namespace pnt {

// Argument outside an operation's domain (n = 0, x beyond a table limit, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested table would not fit the configured memory budget.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pnt
