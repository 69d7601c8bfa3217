#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "knotpack/errors.hpp"
#include "knotpack/probe.hpp"
#include "knotpack/size.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace knotpack;
using namespace knotpack::testing;

TEST_SUITE_BEGIN("probe");

TEST_CASE("distortion: square equals 2 at opposite edge midpoints") {
    DistortionResult r = distortion(make_square(), 8);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-6));
    // Witness pair sits at edge midpoints (arc antipodes).
    CHECK(std::abs(r.witness[0].t - 0.5) < 1e-6);
    CHECK(std::abs(r.witness[1].t - 0.5) < 1e-6);
    // Scale invariant.
    CHECK(distortion(transform(make_square(), Isometry::identity(), 3.5), 8).value ==
          doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("distortion: 512-gon approaches pi/2") {
    CHECK(distortion(make_ngon(512), 4).value == doctest::Approx(kPi / 2).epsilon(1e-3));
}

TEST_CASE("distortion: sampled estimate is monotone in samples_per_edge") {
    PolygonalCurve c = make_perturbed_ngon(20, 0.35, 19);
    double prev = 0.0;
    for (int m : {2, 3, 4, 6, 8, 12}) {
        double v = distortion(c, m, /*refine_iters=*/0).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("distortion: never below the antipodal floor, dense oracle sanity") {
    for (const PolygonalCurve& c : small_corpus()) {
        double est = distortion(c, 8).value;
        CHECK(est >= length(c) / (2.0 * diameter(c)) - 1e-9);
        // The estimate is itself a valid lower bound, so a dense uniform
        // double-sampling cannot exceed the refined estimate by much more
        // than its own discretization error.
        double dense = oracle_distortion_dense(c, 12);
        CHECK(est >= dense * (1 - 2e-2));
    }
}

TEST_CASE("distortion_bounds_report: square and 512-gon closed forms") {
    DistortionBounds sq = distortion_bounds_report(make_square());
    CHECK(sq.distortion_est == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(sq.len_over_2diam == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sq.len_over_4rmin == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    DistortionBounds big = distortion_bounds_report(make_ngon(512), 4);
    CHECK(big.distortion_est == doctest::Approx(kPi / 2).epsilon(1e-3));
    CHECK(big.len_over_2diam == doctest::Approx(kPi / 2).epsilon(1e-4));
    CHECK(big.len_over_4rmin == doctest::Approx(kPi / 2).epsilon(1e-4));

    DistortionBounds tri = distortion_bounds_report(make_triangle());
    CHECK(tri.distortion_est >= 1.5 - 1e-9);  // Len/(2 diam) = 1.5 exactly
    CHECK(tri.len_over_2diam == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("trunk_direction: planar convex curves have trunk 2") {
    PolygonalCurve sq = make_square();
    CHECK(trunk_direction(sq, normalized({0.3, 0.2, 0.1})) == 2);
    CHECK(trunk_direction(make_ngon(17), normalized({0.5, 0.31, 0.7})) == 2);
}

TEST_CASE("trunk_direction: degenerate directions throw") {
    // +z sees all square vertices at height 0.
    CHECK_THROWS_AS(trunk_direction(make_square(), {0, 0, 1}), ValidationError);
}

TEST_CASE("trunk_direction: trefoil along the torus axis crosses 6 times") {
    PolygonalCurve tre = make_trefoil(64);
    // The z-heights are sin(3t): three humps, six crossings at mid levels.
    CHECK(trunk_direction(tre, normalized({1e-4, 2e-4, 1.0})) == 6);
}

TEST_CASE("trunk_direction: parity and scale invariance, level oracle") {
    SplitMix64 rng(23);
    for (const PolygonalCurve& c : {make_trefoil(64), make_perturbed_ngon(24, 0.3, 43)}) {
        for (int rep = 0; rep < 6; ++rep) {
            Vec3 v = normalized(
                {rng.uniform01() * 2 - 1, rng.uniform01() * 2 - 1, rng.uniform01() * 2 - 1});
            int t;
            try {
                t = trunk_direction(c, v);
            } catch (const ValidationError&) {
                continue;
            }
            CHECK(t % 2 == 0);
            CHECK(t >= 2);
            CHECK(trunk_direction(transform(c, Isometry::identity(), 2.5), v) == t);
            CHECK(oracle_trunk_levels(c, v, 1000, 5000 + rep) == t);
        }
    }
}

TEST_CASE("trunk_sweep: square grid gives min = max = 2") {
    TrunkProfile profile = trunk_sweep(make_square(), DirectionGrid::fibonacci(128));
    CHECK(profile.min_v == 2);
    CHECK(profile.max_v == 2);
    for (const auto& e : profile.entries) CHECK(e.trunk_v == 2);
}

TEST_CASE("trunk_sweep: deterministic, and max_v stable under grid doubling") {
    PolygonalCurve tre = make_trefoil(64);
    TrunkProfile a = trunk_sweep(tre, DirectionGrid::fibonacci(1024));
    TrunkProfile b = trunk_sweep(tre, DirectionGrid::fibonacci(2048));
    CHECK(a.max_v == b.max_v);
    CHECK(a.min_v >= 2);
    CHECK(a.max_v >= a.min_v);

    TrunkProfile again = trunk_sweep(tre, DirectionGrid::fibonacci(1024));
    REQUIRE(again.entries.size() == a.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(again.entries[i].trunk_v == a.entries[i].trunk_v);
        CHECK(again.entries[i].direction == a.entries[i].direction);
    }
}

TEST_CASE("trunk_sweep: profile equivariant under rotation of curve and grid") {
    PolygonalCurve tre = make_trefoil(48);
    DirectionGrid grid = DirectionGrid::fibonacci(64);
    TrunkProfile base = trunk_sweep(tre, grid);

    SplitMix64 rng(31);
    Isometry g = random_isometry(rng);
    g.translation = {0, 0, 0};
    PolygonalCurve moved = transform(tre, g, 1.0);
    DirectionGrid rotated = grid;
    for (Vec3& v : rotated.directions) v = g.rotation.apply(v);
    TrunkProfile rot = trunk_sweep(moved, rotated);

    // Compare the base-grid entries only: the refinement caps recenter on
    // argmax/argmin directions, and ties may resolve differently between the
    // two frames.
    auto counts = [&](const TrunkProfile& p) {
        std::vector<int> v;
        for (std::size_t i = 0; i < grid.directions.size(); ++i)
            v.push_back(p.entries[i].trunk_v);
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(counts(base) == counts(rot));
    CHECK(base.max_v == rot.max_v);
    CHECK(base.min_v == rot.min_v);
}

TEST_CASE("direction grids: unit vectors, size constraints") {
    DirectionGrid grid = DirectionGrid::fibonacci(32);
    CHECK(grid.directions.size() == 32);
    for (const Vec3& v : grid.directions) CHECK(std::abs(norm(v) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(DirectionGrid::fibonacci(8), ValidationError);

    DirectionGrid cap = DirectionGrid::refined({0, 0, 1}, 0.3, 16);
    for (const Vec3& v : cap.directions) {
        CHECK(std::abs(norm(v) - 1.0) <= 1e-12);
        CHECK(dot(v, Vec3{0, 0, 1}) >= std::cos(0.3) - 1e-12);
    }
}

TEST_SUITE_END();
