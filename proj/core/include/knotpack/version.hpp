#ifndef KNOTPACK_VERSION_HPP
#define KNOTPACK_VERSION_HPP

namespace knotpack {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace knotpack

#endif  // KNOTPACK_VERSION_HPP
