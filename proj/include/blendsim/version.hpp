#pragma once

namespace blendsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace blendsim
