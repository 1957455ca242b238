#pragma once

namespace gcdval {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace gcdval
