#ifndef KNOTPACK_PROBE_HPP
#define KNOTPACK_PROBE_HPP

#include <string>
#include <vector>

#include "knotpack/curve.hpp"
#include "knotpack/thickness.hpp"

namespace knotpack {

struct DirectionGrid {
    std::vector<Vec3> directions;  // unit vectors
    std::string kind;

    // Fibonacci-sphere grid; N >= 32.
    static DirectionGrid fibonacci(int n);
    // Fibonacci pattern inside the spherical cap of the given half-angle
    // around `center`; used for the refinement pass of trunk_sweep.
    static DirectionGrid refined(const Vec3& center, double cap_half_angle, int n);
};

struct DistortionResult {
    double value = 0.0;
    std::array<EdgePoint, 2> witness{};
};

// Sampled maximization of (shorter arc distance)/(chord) over point pairs,
// with golden-section refinement of the best sampled pairs. Samples per edge
// follow a van der Corput sequence, so growing samples_per_edge only adds
// points and the sampled estimate is monotone nondecreasing. Each sample is
// also paired with its arclength antipode, which makes the estimate dominate
// Len/(2*diam) by construction. Always a lower bound on the true distortion.
DistortionResult distortion(const PolygonalCurve& curve, int samples_per_edge,
                            int refine_iters = 40);

struct DistortionBounds {
    double distortion_est = 0.0;
    double len_over_2diam = 0.0;
    double len_over_4rmin = 0.0;
};

// Distortion estimate together with its two density lower bounds; throws
// NumericError if the estimate falls below either bound minus 1e-9 (the
// estimator is a lower bound of a quantity bounded below by both).
DistortionBounds distortion_bounds_report(const PolygonalCurve& curve,
                                          int samples_per_edge = 16);

// Maximal number of intersections of the curve with regular level planes of
// the height function x -> <x, v>. Requires v regular: all vertex heights
// pairwise distinct by more than 1e-10 * diameter; throws ValidationError
// ("degenerate direction") otherwise. Always even and >= 2.
int trunk_direction(const PolygonalCurve& curve, const Vec3& v);

struct TrunkProfile {
    struct Entry {
        Vec3 direction;
        int trunk_v = 0;
    };
    std::vector<Entry> entries;
    int min_v = 0;         // upper bound for trunk(curve)
    int max_v = 0;         // lower bound for strunk(curve)
    Vec3 min_direction;
    Vec3 max_direction;
};

// Evaluates trunk_direction over the grid (degenerate directions are
// perturbed deterministically, seeded by direction index), then runs one
// refinement pass on spherical caps around the current extremes.
TrunkProfile trunk_sweep(const PolygonalCurve& curve, const DirectionGrid& grid);

}  // namespace knotpack

#endif  // KNOTPACK_PROBE_HPP
