#pragma once

#include <string>

namespace otoc {

inline constexpr const char* kLibraryName = "otoc-sim";
inline constexpr const char* kLibraryVersion = "0.1.0";

inline std::string library_stamp() {
    return std::string(kLibraryName) + " " + kLibraryVersion;
}

}  // namespace otoc
