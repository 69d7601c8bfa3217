#ifndef KNOTPACK_HULL_HPP
#define KNOTPACK_HULL_HPP

#include <span>

#include "knotpack/geom.hpp"

namespace knotpack {

// Volume of the 3D convex hull of a point set, via an incremental hull.
// Degenerate inputs (fewer than 4 points, coplanar sets, hulls with volume
// below 1e-12 * diam^3) report exactly 0 rather than failing: planar curves
// are legitimate inputs whose hull volume vanishes.
double convex_hull_volume(std::span<const Vec3> pts);

}  // namespace knotpack

#endif  // KNOTPACK_HULL_HPP
