#pragma once

namespace rrm {
inline constexpr const char* kVersion = "0.1.0";
}
