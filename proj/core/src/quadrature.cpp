#include "knotpack/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "knotpack/errors.hpp"

namespace knotpack {

namespace {

// Legendre P_n(x) and derivative by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

std::vector<QuadratureNode> build(int n) {
    std::vector<QuadratureNode> nodes(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, then Newton.
        double x = std::cos(3.141592653589793238462643383279 * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(n, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(n, x);
        (void)p;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = {0.5 * (1.0 - x), 0.5 * w};  // reversed order is harmless
    }
    return nodes;
}

}  // namespace

const std::vector<QuadratureNode>& gauss_legendre_unit(int points) {
    if (points < 1) throw ValidationError("quadrature needs at least 1 point");
    static std::map<int, std::vector<QuadratureNode>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(points);
    if (it == cache.end()) it = cache.emplace(points, build(points)).first;
    return it->second;
}

}  // namespace knotpack
