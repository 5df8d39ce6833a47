#pragma once

namespace nonconv {

inline constexpr const char* kVersion = "nonconv 0.1.0";

}  // namespace nonconv
