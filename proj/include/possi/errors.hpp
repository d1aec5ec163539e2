#pragma once

#include <stdexcept>
#include <string>

namespace possi {

/// Raised when a constructor or operation receives parameters outside their admissible set.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a function is evaluated outside its domain (utility, level parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace possi
