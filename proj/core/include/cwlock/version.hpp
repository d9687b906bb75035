#pragma once

namespace cwlock {

inline constexpr const char* version = "0.1.0";

}  // namespace cwlock
