#pragma once

namespace rispls {

inline constexpr const char* kVersion = "1.0.0";

}
