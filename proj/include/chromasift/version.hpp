#pragma once

namespace chromasift {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace chromasift
