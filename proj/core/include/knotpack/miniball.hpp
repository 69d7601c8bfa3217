#ifndef KNOTPACK_MINIBALL_HPP
#define KNOTPACK_MINIBALL_HPP

#include <span>

#include "knotpack/geom.hpp"

namespace knotpack {

struct Ball {
    Vec3 center;
    double radius = 0.0;
};

// Smallest enclosing ball of a point set (Welzl's move-to-front algorithm,
// deterministic: a fixed-seed shuffle replaces the usual random permutation).
// Exact up to floating-point roundoff.
Ball smallest_enclosing_ball(std::span<const Vec3> pts);

}  // namespace knotpack

#endif  // KNOTPACK_MINIBALL_HPP
