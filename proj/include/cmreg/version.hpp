#ifndef CMREG_VERSION_HPP
#define CMREG_VERSION_HPP

namespace cmreg {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int schema_version = 1;

}  // namespace cmreg

#endif
