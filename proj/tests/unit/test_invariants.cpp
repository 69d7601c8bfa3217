#include <doctest.h>

#include <cmath>

#include "knotpack/errors.hpp"
#include "knotpack/invariants.hpp"
#include "knotpack/thickness.hpp"
#include "support/corpus.hpp"

using namespace knotpack;
using namespace knotpack::testing;

TEST_SUITE_BEGIN("invariants");

TEST_CASE("report: square with D = R_min, closed forms") {
    InvariantReport r = compute_invariants(make_square(), SizeFunctionalSpec::rmin());
    CHECK(r.len == doctest::Approx(4 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.d_value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.thickness == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
    CHECK(r.rho == doctest::Approx(5.656854249492380).epsilon(1e-12));
    CHECK(r.crad == doctest::Approx(1.414213562373095).epsilon(1e-12));
    CHECK(r.rop == doctest::Approx(8.0).epsilon(1e-13));
    CHECK(r.factorization_residual <= 1e-12);
    CHECK(std::abs(r.pack * r.crad - 1.0) <= 1e-12);
}

TEST_CASE("report: regular 512-gon reproduces the round-circle values") {
    PolygonalCurve big = make_ngon(512);
    InvariantReport rmin = compute_invariants(big, SizeFunctionalSpec::rmin());
    CHECK(rmin.rho == doctest::Approx(2 * kPi).epsilon(1e-3));
    CHECK(std::abs(rmin.crad - 1.0) < 1e-4);
    CHECK(rmin.rop == doctest::Approx(2 * kPi).epsilon(1e-2));

    InvariantReport diam = compute_invariants(big, SizeFunctionalSpec::diam());
    CHECK(diam.rho == doctest::Approx(kPi).epsilon(1e-3));
    CHECK(std::abs(diam.crad - 2.0) < 1e-4);
}

TEST_CASE("factorization residual <= 1e-12 across corpus and kinds") {
    std::vector<SizeFunctionalSpec> kinds = {
        SizeFunctionalSpec::diam(),     SizeFunctionalSpec::rmin(),
        SizeFunctionalSpec::radial(3),  SizeFunctionalSpec::pairwise(3),
        SizeFunctionalSpec::conv(0.01), SizeFunctionalSpec::gyration(),
        SizeFunctionalSpec::star()};
    for (const PolygonalCurve& c : small_corpus())
        for (const SizeFunctionalSpec& spec : kinds) {
            InvariantReport r = compute_invariants(c, spec);
            CHECK(r.factorization_residual <= 1e-12);
            CHECK(r.rho > 0.0);
            CHECK(r.crad > 0.0);
            CHECK(r.pack > 0.0);
            CHECK(r.rop > 0.0);
        }
}

TEST_CASE("artificial size functional: D* = Thi (1 + exp(-Rop))") {
    // Square: Rop = 8 exactly, so D* = (sqrt(2)/2)(1 + e^-8).
    double expect = (std::sqrt(2.0) / 2.0) * (1.0 + std::exp(-8.0));
    CHECK(artificial_size(make_square()) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect == doctest::Approx(0.707344).epsilon(1e-6));

    // crad(D*) = 1 + exp(-rop) to 1e-12, inside (1, 2). The lower end is
    // strict in exact arithmetic; in doubles exp(-rop) underflows below one
    // ulp of 1 once rop exceeds ~36, collapsing crad to exactly 1.
    for (const PolygonalCurve& c : small_corpus()) {
        InvariantReport r = compute_invariants(c, SizeFunctionalSpec::star());
        CHECK(std::abs(r.crad - (1.0 + std::exp(-r.rop))) <= 1e-12);
        if (std::exp(-r.rop) > 4e-16) CHECK(r.crad > 1.0);
        else CHECK(r.crad >= 1.0);
        CHECK(r.crad < 2.0);
        CHECK(r.rho == doctest::Approx(r.rop / (1.0 + std::exp(-r.rop))).epsilon(1e-12));
    }
}

TEST_CASE("artificial size: rho ordering matches rop ordering") {
    // x / (1 + e^-x) is strictly increasing, so lower rop means lower rho(D*).
    InvariantReport sq = compute_invariants(make_square(), SizeFunctionalSpec::star());
    InvariantReport tri = compute_invariants(make_triangle(), SizeFunctionalSpec::star());
    REQUIRE(sq.rop < tri.rop);
    CHECK(sq.rho < tri.rho);
}

TEST_CASE("comparison_check: square and triangle") {
    ComparisonReport sq = comparison_check(make_square());
    CHECK(sq.len_over_diam == doctest::Approx(2.828427124746190).epsilon(1e-12));
    CHECK(sq.len_over_rmin == doctest::Approx(5.656854249492380).epsilon(1e-12));
    CHECK(sq.two_len_over_diam == doctest::Approx(5.656854249492380).epsilon(1e-12));
    // Middle equals upper here: R_min = diam/2 for the square.
    CHECK(sq.len_over_rmin == doctest::Approx(sq.two_len_over_diam).epsilon(1e-12));

    ComparisonReport tri = comparison_check(make_triangle());
    CHECK(tri.len_over_rmin == doctest::Approx(3 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(tri.two_len_over_diam == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(tri.len_over_rmin < tri.two_len_over_diam);  // strict here

    for (const PolygonalCurve& c : small_corpus()) CHECK_NOTHROW(comparison_check(c));
}

TEST_CASE("rho_diam >= 2 on every corpus curve") {
    for (const PolygonalCurve& c : small_corpus()) {
        InvariantReport r = compute_invariants(c, SizeFunctionalSpec::diam());
        CHECK(r.rho >= 2.0 - 1e-12);
    }
}

TEST_CASE("scale-free quantities are invariant under transform") {
    SplitMix64 rng(66);
    PolygonalCurve c = make_trefoil(40);
    for (const SizeFunctionalSpec& spec :
         {SizeFunctionalSpec::diam(), SizeFunctionalSpec::conv(0.01),
          SizeFunctionalSpec::pairwise(3), SizeFunctionalSpec::star()}) {
        InvariantReport base = compute_invariants(c, spec);
        for (int rep = 0; rep < 3; ++rep) {
            Isometry g = random_isometry(rng);
            double a = 0.2 + rng.uniform01() * 4.0;
            InvariantReport moved = compute_invariants(transform(c, g, a), spec);
            CHECK(moved.rho == doctest::Approx(base.rho).epsilon(1e-9));
            CHECK(moved.crad == doctest::Approx(base.crad).epsilon(1e-9));
            CHECK(moved.pack == doctest::Approx(base.pack).epsilon(1e-9));
            CHECK(moved.rop == doctest::Approx(base.rop).epsilon(1e-9));
        }
    }
}

TEST_CASE("ensemble_inequality_check") {
    // Single element: slack is the factorization residual, essentially zero.
    InvariantReport one = compute_invariants(make_square(), SizeFunctionalSpec::diam());
    EnsembleCheck single = ensemble_inequality_check(std::vector<InvariantReport>{one});
    CHECK(std::abs(single.slack) <= 1e-12 * single.min_rop);

    // Rescalings and rotations of the 512-gon: all reports identical up to
    // roundoff, slack stays within 1e-9.
    SplitMix64 rng(77);
    PolygonalCurve big = make_ngon(256);
    std::vector<InvariantReport> ensemble;
    for (int rep = 0; rep < 8; ++rep) {
        Isometry g = random_isometry(rng);
        double a = 0.2 + rng.uniform01() * 4.0;
        ensemble.push_back(
            compute_invariants(transform(big, g, a), SizeFunctionalSpec::diam()));
    }
    EnsembleCheck check = ensemble_inequality_check(ensemble);
    CHECK(check.slack >= -1e-9);
    CHECK(check.min_rop >= check.min_rho * check.min_crad - 1e-9);

    // Mixed functionals and empty ensembles are rejected.
    std::vector<InvariantReport> mixed = {
        compute_invariants(make_square(), SizeFunctionalSpec::diam()),
        compute_invariants(make_square(), SizeFunctionalSpec::rmin())};
    CHECK_THROWS_AS(ensemble_inequality_check(mixed), ValidationError);
    CHECK_THROWS_AS(ensemble_inequality_check(std::vector<InvariantReport>{}), ValidationError);
}

TEST_CASE("csv row format") {
    InvariantReport r = compute_invariants(make_square(), SizeFunctionalSpec::rmin());
    std::string row = invariant_csv_row(r);
    CHECK(row.find("square,rmin,") == 0);
    CHECK(row.find("8,") != std::string::npos);  // rop prints as 8
    CHECK(invariant_csv_header() ==
          "name,functional,len,d,thi,rho,crad,pack,rop,residual");
}

TEST_SUITE_END();
