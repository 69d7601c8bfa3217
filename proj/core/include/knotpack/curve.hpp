#ifndef KNOTPACK_CURVE_HPP
#define KNOTPACK_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "knotpack/geom.hpp"

namespace knotpack {

// Closed embedded polygon in 3-space. The edge from the last vertex back to
// the first is implicit. Curves are immutable values by convention: every
// operation returns a new curve, which makes parallel sweeps trivially safe.
struct PolygonalCurve {
    std::vector<Vec3> vertices;
    std::string name;                // optional label
    std::string claimed_knot_type;   // user-asserted metadata, never verified

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return vertices.size(); }

    const Vec3& vertex(std::size_t i) const { return vertices[i]; }
    const Vec3& edge_start(std::size_t e) const { return vertices[e]; }
    const Vec3& edge_end(std::size_t e) const {
        return vertices[(e + 1 == vertices.size()) ? 0 : e + 1];
    }
    Vec3 edge_vector(std::size_t e) const { return edge_end(e) - edge_start(e); }
    double edge_length(std::size_t e) const { return norm(edge_vector(e)); }

    Vec3 point_at(std::size_t e, double t) const {
        return edge_start(e) + edge_vector(e) * t;
    }
};

// Rigid motion plus optional reflection: x -> R*x + t with R orthogonal.
struct Isometry {
    Mat3 rotation;
    Vec3 translation;

    static Isometry identity() { return Isometry{}; }

    // Throws ValidationError unless rotation columns are orthonormal to 1e-12.
    void validate() const;
};

struct EmbeddingCheck {
    bool embedded = true;
    // Witness pair of closed edges realizing a violation (valid iff !embedded).
    int edge_a = -1;
    int edge_b = -1;
};

// Default relative tolerance for embeddedness checks (relative to diameter).
inline constexpr double kEmbedTol = 1e-9;

// True iff all non-adjacent closed edge pairs are at distance > tol*diameter
// and adjacent edges meet only at their shared vertex (no doubled-back pair).
EmbeddingCheck is_embedded(const PolygonalCurve& curve, double tol = kEmbedTol);

// Full invariant check: >=3 vertices, positive edge lengths, no turning angle
// of pi, embedded. Throws ValidationError with a specific message otherwise.
void validate_curve(const PolygonalCurve& curve, double tol = kEmbedTol);

// Reads the JSON curve file format and validates all invariants
// (including the embeddedness check). Throws ValidationError.
PolygonalCurve load_curve(const std::string& path);

// Parses a curve from JSON text (same format as load_curve).
PolygonalCurve parse_curve_json(const std::string& text);

void save_curve(const std::string& path, const PolygonalCurve& curve);
std::string curve_to_json(const PolygonalCurve& curve);

// Total length: sum of edge lengths.
double length(const PolygonalCurve& curve);

// x -> scale * (R*x) + t applied to every vertex. scale must be positive.
PolygonalCurve transform(const PolygonalCurve& curve, const Isometry& g, double scale);

// (1/Len) * sum over edges of the exact per-edge line integral of x ds,
// i.e. edge midpoint weighted by edge length.
Vec3 arclength_barycenter(const PolygonalCurve& curve);

// Cosine of the turning angle at vertex i (angle between incoming and
// outgoing edge directions); +1 for straight, -1 for doubled back.
double turning_cosine(const PolygonalCurve& curve, std::size_t i);

// Prefix arclengths: entry i is the arclength from vertex 0 to vertex i;
// entry n is the total length. Used for arc distances along the curve.
std::vector<double> arclength_prefix(const PolygonalCurve& curve);

}  // namespace knotpack

#endif  // KNOTPACK_CURVE_HPP
