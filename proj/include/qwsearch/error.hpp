#pragma once

#include <stdexcept>

namespace qwsearch {

/// Raised for any argument that violates a documented precondition. The
/// message always starts with the name of the offending field.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qwsearch
