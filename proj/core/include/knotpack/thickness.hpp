#ifndef KNOTPACK_THICKNESS_HPP
#define KNOTPACK_THICKNESS_HPP

#include <array>
#include <limits>

#include "knotpack/curve.hpp"

namespace knotpack {

// A point on the curve addressed as (edge index, edge parameter in [0,1]).
// A vertex i is addressed as (edge i, t = 0).
struct EdgePoint {
    int edge = -1;
    double t = 0.0;
};

struct MinRadResult {
    double value = std::numeric_limits<double>::infinity();
    int vertex = -1;
};

// Per-vertex inscribed-arc radius: min over vertices of
// (min(|e_{i-1}|, |e_i|)/2) / tan(theta_i/2), with theta_i the turning angle.
// Straight vertices (theta = 0) contribute +infinity. Throws NumericError on
// a pi-turn vertex (those are rejected at load).
MinRadResult min_rad(const PolygonalCurve& curve);

struct DcsdResult {
    double value = std::numeric_limits<double>::infinity();
    std::array<EdgePoint, 2> witness{};
    bool found = false;
};

// Doubly critical self-distance: minimum |x - y| over pairs of curve points
// that are each critical for the distance to the other. At edge-interior
// points criticality is perpendicularity to the edge; at a vertex the
// connecting vector must lie in the normal cone (one-sided arc derivatives
// both nonnegative, a local minimum) or in its opposite (both nonpositive, a
// local maximum -- e.g. the vertex of a triangle against the opposite edge,
// or antipodal points of a convex curve). Candidate pairs are enumerated as
// non-adjacent edge-pair minimizers (interior-interior), vertex against
// non-incident edge, and non-neighboring vertex pairs. Returns +infinity with
// found = false when no pair qualifies (near-convex curves where MinRad
// governs the thickness).
DcsdResult dcsd(const PolygonalCurve& curve);

struct ThicknessBreakdown {
    double min_rad = 0.0;
    int min_rad_vertex = -1;
    double dcsd = std::numeric_limits<double>::infinity();
    std::array<EdgePoint, 2> dcsd_witness{};
    bool dcsd_found = false;
    // Diagnostic only: unconstrained minimum distance over non-adjacent
    // closed edge pairs; lower-bounds dcsd.
    double min_pair_dist = std::numeric_limits<double>::infinity();
    double thickness = 0.0;  // min(min_rad, dcsd/2)
};

ThicknessBreakdown polygonal_thickness(const PolygonalCurve& curve);

// Same thickness value as polygonal_thickness().thickness, computed with
// bounding-sphere pruning against min(2*min_rad, best candidate so far).
// Pruned pairs provably cannot lower the minimum, so the result is
// bit-identical to the full breakdown; witnesses are not produced. This is
// the annealing hot path.
double thickness_value(const PolygonalCurve& curve);

}  // namespace knotpack

#endif  // KNOTPACK_THICKNESS_HPP
