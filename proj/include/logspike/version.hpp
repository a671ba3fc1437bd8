#pragma once

namespace logspike {

inline constexpr const char* version = "0.1.0";

}
