#pragma once

namespace oscent {
inline constexpr const char* kVersion = "0.1.0";
}
