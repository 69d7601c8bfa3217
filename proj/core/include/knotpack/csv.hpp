#ifndef KNOTPACK_CSV_HPP
#define KNOTPACK_CSV_HPP

#include <string>

namespace knotpack {

// 17 significant digits, '.' decimal separator, locale-independent:
// round-trips IEEE doubles exactly, so repeated runs emit identical bytes.
std::string format_double(double v);

std::string format_int(long long v);

}  // namespace knotpack

#endif  // KNOTPACK_CSV_HPP
