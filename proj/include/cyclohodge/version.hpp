#pragma once

namespace cyclohodge {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cyclohodge
