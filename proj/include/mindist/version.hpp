#pragma once

namespace mindist {

inline constexpr const char* kToolName = "mindist";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace mindist
