#ifndef REDSYL_VERSION_HPP
#define REDSYL_VERSION_HPP

namespace redsyl {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "report_v1";

} // namespace redsyl

#endif
