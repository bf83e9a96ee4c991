#pragma once

namespace mathieu_lattice {

inline constexpr const char* kProjectName = "mathieu-lattice";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace mathieu_lattice
