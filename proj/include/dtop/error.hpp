#pragma once

#include <stdexcept>
#include <string>

namespace dtop {

/// Every failure raised by the library carries a short machine-readable kind
/// ("composition-undefined", "non-unital", "incompatible-relation", ...) next
/// to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace dtop
