#include "knotpack/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "knotpack/errors.hpp"
#include "knotpack/rng.hpp"
#include "knotpack/size.hpp"

namespace knotpack {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kGoldenAngle = 2.3999632297286533222;  // pi * (3 - sqrt(5))

// k-th term of the base-2 van der Corput sequence: 0, 1/2, 1/4, 3/4, ...
// Nested prefixes make the distortion sample set grow monotonically.
double van_der_corput(unsigned k) {
    double v = 0.0, base = 0.5;
    while (k) {
        if (k & 1u) v += base;
        base *= 0.5;
        k >>= 1;
    }
    return v;
}

struct ArcSample {
    EdgePoint at;
    Vec3 point;
    double s;  // arclength position
};

struct ArcContext {
    const PolygonalCurve* curve;
    std::vector<double> prefix;
    double total;

    explicit ArcContext(const PolygonalCurve& c)
        : curve(&c), prefix(arclength_prefix(c)), total(0.0) {
        total = prefix.back();
    }

    double arc_position(const EdgePoint& p) const {
        return prefix[p.edge] + p.t * (prefix[p.edge + 1] - prefix[p.edge]);
    }

    EdgePoint locate(double s) const {
        s = std::fmod(s, total);
        if (s < 0.0) s += total;
        auto it = std::upper_bound(prefix.begin(), prefix.end(), s);
        std::size_t e = std::min<std::size_t>(it - prefix.begin() - 1, prefix.size() - 2);
        double el = prefix[e + 1] - prefix[e];
        return {static_cast<int>(e), el > 0.0 ? (s - prefix[e]) / el : 0.0};
    }

    double arc_distance(double sa, double sb) const {
        double d = std::abs(sa - sb);
        return std::min(d, total - d);
    }

    double ratio(const EdgePoint& a, const EdgePoint& b) const {
        double chord = distance(curve->point_at(a.edge, a.t), curve->point_at(b.edge, b.t));
        if (chord <= 0.0) return 0.0;
        return arc_distance(arc_position(a), arc_position(b)) / chord;
    }
};

}  // namespace

DirectionGrid DirectionGrid::fibonacci(int n) {
    if (n < 32) throw ValidationError("fibonacci direction grid needs N >= 32");
    DirectionGrid grid;
    grid.kind = "fibonacci-sphere(" + std::to_string(n) + ")";
    grid.directions.reserve(n);
    for (int k = 0; k < n; ++k) {
        double z = 1.0 - 2.0 * (k + 0.5) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = kGoldenAngle * k;
        grid.directions.push_back(normalized({r * std::cos(phi), r * std::sin(phi), z}));
    }
    return grid;
}

DirectionGrid DirectionGrid::refined(const Vec3& center, double cap_half_angle, int n) {
    if (n < 1) throw ValidationError("refined direction grid needs N >= 1");
    DirectionGrid grid;
    grid.kind = "refined(cap=" + std::to_string(cap_half_angle) + ")";
    Vec3 c = normalized(center);
    Vec3 helper = std::abs(c.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 e1 = normalized(cross(c, helper));
    Vec3 e2 = cross(c, e1);
    double zmin = std::cos(cap_half_angle);
    grid.directions.reserve(n);
    for (int k = 0; k < n; ++k) {
        double z = 1.0 - (1.0 - zmin) * (k + 0.5) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = kGoldenAngle * k;
        grid.directions.push_back(
            normalized(e1 * (r * std::cos(phi)) + e2 * (r * std::sin(phi)) + c * z));
    }
    return grid;
}

DistortionResult distortion(const PolygonalCurve& curve, int samples_per_edge,
                            int refine_iters) {
    if (samples_per_edge < 2) throw ValidationError("distortion needs samples_per_edge >= 2");
    ArcContext ctx(curve);
    const std::size_t n = curve.edge_count();

    std::vector<ArcSample> samples;
    samples.reserve(n * samples_per_edge);
    for (std::size_t e = 0; e < n; ++e)
        for (int k = 0; k < samples_per_edge; ++k) {
            EdgePoint at{static_cast<int>(e), van_der_corput(static_cast<unsigned>(k))};
            samples.push_back({at, curve.point_at(at.edge, at.t), ctx.arc_position(at)});
        }

    struct Candidate {
        double value;
        EdgePoint a, b;
    };
    DistortionResult best;
    std::vector<Candidate> top;  // bounded pool for refinement, worst first
    const std::size_t top_cap = 64;
    auto consider = [&](double value, const EdgePoint& a, const EdgePoint& b) {
        if (value > best.value) {
            best.value = value;
            best.witness = {a, b};
        }
        if (top.size() < top_cap) {
            top.push_back({value, a, b});
            std::push_heap(top.begin(), top.end(),
                           [](const Candidate& x, const Candidate& y) { return x.value > y.value; });
        } else if (value > top.front().value) {
            std::pop_heap(top.begin(), top.end(),
                          [](const Candidate& x, const Candidate& y) { return x.value > y.value; });
            top.back() = {value, a, b};
            std::push_heap(top.begin(), top.end(),
                           [](const Candidate& x, const Candidate& y) { return x.value > y.value; });
        }
    };

    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const ArcSample& a = samples[i];
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const ArcSample& b = samples[j];
            double chord = distance(a.point, b.point);
            if (chord <= 0.0) continue;
            consider(ctx.arc_distance(a.s, b.s) / chord, a.at, b.at);
        }
    }
    // Arclength antipodes: d_arc = Len/2 and chord <= diam, so the estimate
    // dominates Len/(2*diam) no matter how coarse the sampling is.
    for (const ArcSample& a : samples) {
        EdgePoint anti = ctx.locate(a.s + 0.5 * ctx.total);
        double chord = distance(a.point, curve.point_at(anti.edge, anti.t));
        if (chord <= 0.0) continue;
        consider((0.5 * ctx.total) / chord, a.at, anti);
    }

    if (refine_iters > 0) {
        const double window = 1.0 / samples_per_edge;
        constexpr double kGolden = 0.6180339887498949;
        for (const Candidate& cand : top) {
            EdgePoint a = cand.a, b = cand.b;
            int sweeps = std::max(1, refine_iters / 10);
            for (int sweep = 0; sweep < sweeps; ++sweep) {
                for (int side = 0; side < 2; ++side) {
                    EdgePoint& point = side == 0 ? a : b;
                    double lo = std::max(0.0, point.t - window);
                    double hi = std::min(1.0, point.t + window);
                    double x1 = hi - kGolden * (hi - lo);
                    double x2 = lo + kGolden * (hi - lo);
                    auto eval = [&](double t) {
                        EdgePoint probe{point.edge, t};
                        return side == 0 ? ctx.ratio(probe, b) : ctx.ratio(a, probe);
                    };
                    double f1 = eval(x1), f2 = eval(x2);
                    for (int it = 0; it < 10; ++it) {
                        if (f1 > f2) {
                            hi = x2;
                            x2 = x1;
                            f2 = f1;
                            x1 = hi - kGolden * (hi - lo);
                            f1 = eval(x1);
                        } else {
                            lo = x1;
                            x1 = x2;
                            f1 = f2;
                            x2 = lo + kGolden * (hi - lo);
                            f2 = eval(x2);
                        }
                    }
                    point.t = 0.5 * (lo + hi);
                }
            }
            double refined = ctx.ratio(a, b);
            if (refined > best.value) {
                best.value = refined;
                best.witness = {a, b};
            }
        }
    }
    return best;
}

DistortionBounds distortion_bounds_report(const PolygonalCurve& curve, int samples_per_edge) {
    DistortionBounds out;
    out.distortion_est = distortion(curve, samples_per_edge).value;
    double len = length(curve);
    out.len_over_2diam = len / (2.0 * diameter(curve));
    out.len_over_4rmin = len / (4.0 * min_enclosing_radius(curve).radius);
    if (out.distortion_est < out.len_over_2diam - 1e-9 ||
        out.distortion_est < out.len_over_4rmin - 1e-9)
        throw NumericError("distortion estimate fell below its density lower bound");
    return out;
}

int trunk_direction(const PolygonalCurve& curve, const Vec3& v) {
    const std::size_t n = curve.vertex_count();
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = dot(curve.vertex(i), v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });

    double gap_tol = 1e-10 * diameter(curve);
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (h[order[k + 1]] - h[order[k]] <= gap_tol)
            throw ValidationError("degenerate direction: vertex heights not separated");

    // Sweep levels upward; passing a vertex opens edges rising from it and
    // closes edges arriving at it. The running count is the number of
    // crossings for any regular level inside the current gap.
    int count = 0, best = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = order[k];
        std::size_t prev = (i + n - 1) % n;
        std::size_t next = (i + 1) % n;
        count += h[next] > h[i] ? 1 : -1;
        count += h[prev] > h[i] ? 1 : -1;
        if (k + 1 < n) best = std::max(best, count);
    }
    return best;
}

TrunkProfile trunk_sweep(const PolygonalCurve& curve, const DirectionGrid& grid) {
    if (grid.directions.empty()) throw ValidationError("trunk sweep needs a nonempty grid");
    TrunkProfile profile;

    auto evaluate = [&](const Vec3& dir, std::uint64_t perturb_seed) {
        Vec3 v = dir;
        double magnitude = 1e-8;
        for (int attempt = 0; attempt < 40; ++attempt) {
            try {
                int t = trunk_direction(curve, v);
                profile.entries.push_back({v, t});
                return;
            } catch (const ValidationError&) {
                SplitMix64 rng(SplitMix64(perturb_seed).derive(attempt).next());
                Vec3 offset{rng.uniform01() - 0.5, rng.uniform01() - 0.5, rng.uniform01() - 0.5};
                v = normalized(dir + offset * (2.0 * magnitude));
                if ((attempt + 1) % 8 == 0) magnitude *= 10.0;
            }
        }
        throw NumericError("could not find a regular direction near a grid point");
    };

    for (std::size_t i = 0; i < grid.directions.size(); ++i) evaluate(grid.directions[i], i);

    auto update_extremes = [&]() {
        profile.min_v = profile.entries.front().trunk_v;
        profile.max_v = profile.entries.front().trunk_v;
        profile.min_direction = profile.entries.front().direction;
        profile.max_direction = profile.entries.front().direction;
        for (const auto& e : profile.entries) {
            if (e.trunk_v < profile.min_v) {
                profile.min_v = e.trunk_v;
                profile.min_direction = e.direction;
            }
            if (e.trunk_v > profile.max_v) {
                profile.max_v = e.trunk_v;
                profile.max_direction = e.direction;
            }
        }
    };
    update_extremes();

    // One refinement pass on caps around the current extremes; the cap
    // half-angle matches the mean grid spacing.
    double spacing = std::sqrt(4.0 * kPi / static_cast<double>(grid.directions.size()));
    int refine_n = 64;
    DirectionGrid cap_max = DirectionGrid::refined(profile.max_direction, spacing, refine_n);
    DirectionGrid cap_min = DirectionGrid::refined(profile.min_direction, spacing, refine_n);
    for (std::size_t i = 0; i < cap_max.directions.size(); ++i)
        evaluate(cap_max.directions[i], 1000003 + i);
    for (std::size_t i = 0; i < cap_min.directions.size(); ++i)
        evaluate(cap_min.directions[i], 2000003 + i);
    update_extremes();
    return profile;
}

}  // namespace knotpack
