#pragma once

namespace sfqm {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace sfqm
