#ifndef KSCHUR_VERSION_HPP
#define KSCHUR_VERSION_HPP

namespace kschur {

inline constexpr const char* version_string = "0.1.0";

} // namespace kschur

#endif
