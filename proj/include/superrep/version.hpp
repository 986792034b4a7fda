#pragma once

namespace superrep {

inline constexpr const char* kVersion = "superrep 0.1.0";

}  // namespace superrep
