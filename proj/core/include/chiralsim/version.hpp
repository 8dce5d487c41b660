#pragma once

namespace chiralsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chiralsim
