#pragma once

#include <string_view>

namespace jobgate {

inline constexpr int kVersionMajor = 1;
inline constexpr int kVersionMinor = 0;
inline constexpr int kVersionPatch = 0;
inline constexpr std::string_view kReleaseDate = "2026-10-14";

/// Payload text of the version service.
inline constexpr std::string_view kVersionLine = "JOBGATEv1.0.0 released 2026-10-14";

}  // namespace jobgate
