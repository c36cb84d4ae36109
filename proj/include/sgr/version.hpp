#pragma once

namespace sgr {

inline constexpr const char* kToolName = "sgr";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace sgr
