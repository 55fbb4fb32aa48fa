#pragma once

namespace cng {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cng
