#include "knotpack/miniball.hpp"

#include <algorithm>
#include <vector>

#include "knotpack/rng.hpp"

namespace knotpack {

namespace {

constexpr double kRelEps = 1e-13;

bool contains(const Ball& b, const Vec3& p) {
    double d2 = distance2(p, b.center);
    return d2 <= b.radius * b.radius * (1.0 + kRelEps) + 1e-300;
}

Ball ball_two(const Vec3& a, const Vec3& b) {
    Vec3 c = (a + b) * 0.5;
    return {c, distance(a, c)};
}

// Smallest ball with three boundary points (their circumcircle in 3D).
// Falls back to the best two-point ball for near-collinear triples.
Ball ball_three(const Vec3& A, const Vec3& B, const Vec3& C) {
    Vec3 u = B - A, v = C - A;
    Vec3 uxv = cross(u, v);
    double denom = 2.0 * norm2(uxv);
    double scale = std::max(norm2(u), norm2(v));
    if (denom <= 1e-24 * scale * scale) {
        Ball best = ball_two(A, B);
        Ball bc = ball_two(A, C);
        if (bc.radius > best.radius) best = bc;
        Ball cc = ball_two(B, C);
        if (cc.radius > best.radius) best = cc;
        return best;
    }
    Vec3 o = (cross(uxv, u) * norm2(v) + cross(v, uxv) * norm2(u)) / denom;
    return {A + o, norm(o)};
}

Ball ball_four(const Vec3& A, const Vec3& B, const Vec3& C, const Vec3& D) {
    Vec3 a = B - A, b = C - A, c = D - A;
    double denom = 2.0 * dot(a, cross(b, c));
    double scale = std::max({norm2(a), norm2(b), norm2(c)});
    if (std::abs(denom) <= 1e-24 * scale * scale * std::sqrt(scale)) {
        // Coplanar support: the minimal ball is determined by a sub-triple.
        Ball best{Vec3{}, -1.0};
        const Vec3* pts[4] = {&A, &B, &C, &D};
        for (int skip = 0; skip < 4; ++skip) {
            const Vec3* tri[3];
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != skip) tri[k++] = pts[i];
            Ball cand = ball_three(*tri[0], *tri[1], *tri[2]);
            if (contains(cand, *pts[skip]) && (best.radius < 0.0 || cand.radius < best.radius))
                best = cand;
        }
        if (best.radius >= 0.0) return best;
        return ball_three(A, B, C);
    }
    Vec3 o = (cross(a, b) * norm2(c) + cross(c, a) * norm2(b) + cross(b, c) * norm2(a)) / denom;
    return {A + o, norm(o)};
}

Ball ball_of_support(const Vec3* support[4], int count) {
    switch (count) {
        case 0: return {Vec3{}, 0.0};
        case 1: return {*support[0], 0.0};
        case 2: return ball_two(*support[0], *support[1]);
        case 3: return ball_three(*support[0], *support[1], *support[2]);
        default: return ball_four(*support[0], *support[1], *support[2], *support[3]);
    }
}

// Welzl with move-to-front. `order` holds pointers, mutated in place.
Ball welzl(std::vector<const Vec3*>& order, std::size_t n, const Vec3* support[4], int nsupport) {
    Ball ball = ball_of_support(support, nsupport);
    if (nsupport == 4) return ball;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3* p = order[i];
        if (contains(ball, *p)) continue;
        support[nsupport] = p;
        ball = welzl(order, i, support, nsupport + 1);
        // Move-to-front: outliers get retested early in later passes.
        for (std::size_t k = i; k > 0; --k) order[k] = order[k - 1];
        order[0] = p;
    }
    return ball;
}

}  // namespace

Ball smallest_enclosing_ball(std::span<const Vec3> pts) {
    if (pts.empty()) return {Vec3{}, 0.0};
    std::vector<const Vec3*> order(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) order[i] = &pts[i];
    // Deterministic shuffle guards against adversarial input order.
    SplitMix64 rng(0x5eb411u);
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.uniform_int(i)]);
    const Vec3* support[4] = {nullptr, nullptr, nullptr, nullptr};
    return welzl(order, order.size(), support, 0);
}

}  // namespace knotpack
