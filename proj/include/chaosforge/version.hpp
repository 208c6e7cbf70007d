#pragma once

namespace chaosforge {

inline constexpr const char* kToolName = "chaosforge";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace chaosforge
