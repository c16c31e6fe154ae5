#pragma once

namespace bosonorder {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bosonorder
