#pragma once

namespace ivhs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ivhs
