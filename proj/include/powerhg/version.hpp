#pragma once

namespace powerhg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace powerhg
