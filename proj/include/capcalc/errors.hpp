#pragma once

#include <stdexcept>
#include <string>

namespace capcalc {

/// Malformed input: unparsable files, wrong shapes, unknown names.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace capcalc
