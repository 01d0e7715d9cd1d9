#pragma once

namespace genconn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace genconn
