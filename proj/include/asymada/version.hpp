#pragma once

namespace asymada {
inline constexpr const char* kVersion = "0.1.0";
}
