#pragma once

namespace oversmooth {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace oversmooth
