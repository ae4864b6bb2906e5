#pragma once

namespace knotrep {

inline constexpr const char* version = "0.1.0";

}  // namespace knotrep
