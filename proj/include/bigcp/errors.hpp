#pragma once

#include <stdexcept>
#include <string>

namespace bigcp {

/// Malformed input text (graph files, model files, command-line values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition does not hold: evaluation point outside the
/// zero-free disk, loops where the model forbids them, and so on.
class ContractError : public std::runtime_error {
 public:
  ContractError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// A configured resource cap (enumeration size, series length) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bigcp
