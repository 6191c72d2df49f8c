#pragma once

namespace cpngenus {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

}  // namespace cpngenus
