#pragma once

namespace hyperc {

inline constexpr const char* version() { return "0.1.0"; }

}  // namespace hyperc
