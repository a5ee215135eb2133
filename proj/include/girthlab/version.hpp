#pragma once

namespace girthlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace girthlab
