#include <doctest.h>

#include <cmath>

#include "knotpack/geom.hpp"

using namespace knotpack;

TEST_SUITE_BEGIN("geom");

TEST_CASE("segment-segment distance: crossing, skew, endpoint cases") {
    // Properly crossing segments in a plane.
    SegmentClosest c = closest_segment_segment({0, 0, 0}, {2, 2, 0}, {0, 2, 0}, {2, 0, 0});
    CHECK(c.dist == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.s == doctest::Approx(0.5));
    CHECK(c.t == doctest::Approx(0.5));

    // Skew segments: unit gap along z between midpoints.
    c = closest_segment_segment({-1, 0, 0}, {1, 0, 0}, {0, -1, 1}, {0, 1, 1});
    CHECK(c.dist == doctest::Approx(1.0));
    CHECK(c.s == doctest::Approx(0.5));
    CHECK(c.t == doctest::Approx(0.5));

    // Closest approach at an endpoint.
    c = closest_segment_segment({0, 0, 0}, {1, 0, 0}, {3, 0, 0}, {3, 1, 0});
    CHECK(c.dist == doctest::Approx(2.0));
    CHECK(c.s == doctest::Approx(1.0));
    CHECK(c.t == doctest::Approx(0.0));
}

TEST_CASE("segment-segment distance: parallel overlap returns interior midpoint") {
    // Fully overlapping projections, gap 1: the minimizing family is a whole
    // interval; the canonical representative is its midpoint.
    SegmentClosest c = closest_segment_segment({0, 0, 0}, {4, 0, 0}, {0, 1, 0}, {4, 1, 0});
    CHECK(c.dist == doctest::Approx(1.0));
    CHECK(c.s == doctest::Approx(0.5));
    CHECK(c.t == doctest::Approx(0.5));

    // Partial overlap [2,4] on the first segment.
    c = closest_segment_segment({0, 0, 0}, {4, 0, 0}, {2, 1, 0}, {6, 1, 0});
    CHECK(c.dist == doctest::Approx(1.0));
    CHECK(c.s == doctest::Approx(0.75));  // midpoint of [0.5, 1.0]
    CHECK(c.t == doctest::Approx(0.25));

    // Disjoint projections: nearest endpoints.
    c = closest_segment_segment({0, 0, 0}, {1, 0, 0}, {3, 1, 0}, {5, 1, 0});
    CHECK(c.dist == doctest::Approx(std::sqrt(5.0)));
    CHECK(c.s == doctest::Approx(1.0));
    CHECK(c.t == doctest::Approx(0.0));
}

TEST_CASE("point-segment distance clamps to endpoints") {
    CHECK(point_segment_distance({5, 1, 0}, {0, 0, 0}, {2, 0, 0}) ==
          doctest::Approx(std::sqrt(10.0)));
    CHECK(point_segment_distance({1, 1, 0}, {0, 0, 0}, {2, 0, 0}) == doctest::Approx(1.0));
}

TEST_CASE("segment-triangle distance") {
    Vec3 t0{0, 0, 0}, t1{2, 0, 0}, t2{0, 2, 0};
    // Segment piercing the face.
    auto c = closest_segment_triangle({0.5, 0.5, -1}, {0.5, 0.5, 1}, t0, t1, t2);
    CHECK(c.dist == doctest::Approx(0.0));
    // Segment hovering above the face.
    c = closest_segment_triangle({0.5, 0.5, 1}, {0.7, 0.6, 2}, t0, t1, t2);
    CHECK(c.dist == doctest::Approx(1.0));
    // Segment beyond an edge: distance to the edge, not the plane.
    c = closest_segment_triangle({3, -1, 0}, {3, 3, 0}, t0, t1, t2);
    CHECK(c.dist == doctest::Approx(1.0));
    // Degenerate (collinear) triangle falls back to its edges.
    c = closest_segment_triangle({0, 1, 1}, {2, 1, 1}, {0, 0, 0}, {1, 0, 0}, {2, 0, 0});
    CHECK(c.dist == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rotation matrices are orthonormal and preserve norms") {
    Mat3 r = Mat3::axis_angle(normalized({1, 2, 3}), 1.234);
    CHECK(r.is_orthonormal(1e-12));
    Vec3 v{0.3, -1.7, 2.9};
    CHECK(norm(r.apply(v)) == doctest::Approx(norm(v)).epsilon(1e-14));
    CHECK(r.det() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_SUITE_END();
