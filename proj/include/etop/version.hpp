#pragma once

namespace etop {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace etop
