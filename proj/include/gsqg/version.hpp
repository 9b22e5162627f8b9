#pragma once

namespace gsqg {
inline constexpr const char* version_string = "0.1.0";
}
