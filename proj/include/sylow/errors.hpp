#pragma once

#include <stdexcept>
#include <string>

namespace sylow {

/// Argument outside the mathematical domain of an operation, including
/// 63-bit overflow of an exact integer result.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A hypothesis required for a formula or oracle to be valid does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction exceeded its configured element cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sylow
