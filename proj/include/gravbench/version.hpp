#pragma once

namespace gravbench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gravbench
