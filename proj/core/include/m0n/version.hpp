#pragma once

namespace m0n {

inline constexpr const char* version_string = "0.1.0";

}  // namespace m0n
