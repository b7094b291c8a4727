// Error taxonomy shared by all modules.
//
// - domain_error:   a caller violated a documented precondition.
// - capacity_error: the request is outside the supported 64-bit range
//                   (d >= 2^32, |v| > 8, or an index would overflow).
// - internal_error: a proven invariant failed at runtime; indicates a bug,
//                   never a bad input.
#pragma once

#include <stdexcept>
#include <string>

namespace apword {

struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace apword
