#pragma once

namespace creasim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace creasim
