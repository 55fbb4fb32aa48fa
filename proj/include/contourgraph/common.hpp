#pragma once

#include <stdexcept>
#include <string>

namespace cng {

/// Precondition check; throws std::invalid_argument with the given message.
inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace cng
