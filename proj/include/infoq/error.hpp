#pragma once

#include <stdexcept>
#include <string>

namespace infoq {

/// Raised when an operation's inputs fall outside its mathematical domain
/// (invalid distribution, zero-probability event, non-primitive root, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace infoq
