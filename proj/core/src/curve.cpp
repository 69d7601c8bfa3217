#include "knotpack/curve.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knotpack/errors.hpp"

namespace knotpack {

void Isometry::validate() const {
    if (!rotation.is_orthonormal(1e-12))
        throw ValidationError("isometry rotation is not orthonormal to 1e-12");
}

double turning_cosine(const PolygonalCurve& curve, std::size_t i) {
    std::size_t n = curve.vertex_count();
    std::size_t prev = (i == 0) ? n - 1 : i - 1;
    Vec3 in = curve.edge_vector(prev);
    Vec3 out = curve.edge_vector(i);
    double denom = norm(in) * norm(out);
    if (denom <= 0.0) return 1.0;
    double c = dot(in, out) / denom;
    return std::clamp(c, -1.0, 1.0);
}

EmbeddingCheck is_embedded(const PolygonalCurve& curve, double tol) {
    EmbeddingCheck out;
    std::size_t n = curve.vertex_count();
    if (n < 3) {
        out.embedded = false;
        return out;
    }
    double scale = max_pairwise_distance(curve.vertices);
    if (scale <= 0.0) {
        out.embedded = false;
        return out;
    }
    double cutoff = tol * scale;

    // Adjacent edges may meet only at the shared vertex; for segments this
    // fails exactly when the pair doubles back (turning angle pi).
    for (std::size_t i = 0; i < n; ++i) {
        if (curve.edge_length(i) <= cutoff) {
            out.embedded = false;
            out.edge_a = static_cast<int>(i);
            out.edge_b = static_cast<int>(i);
            return out;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (turning_cosine(curve, i) <= -1.0 + 1e-12) {
            out.embedded = false;
            out.edge_a = static_cast<int>((i == 0) ? n - 1 : i - 1);
            out.edge_b = static_cast<int>(i);
            return out;
        }
    }

    // Non-adjacent closed edge pairs must stay strictly apart. Bounding-sphere
    // rejection keeps the O(n^2) loop cheap.
    std::vector<Vec3> centers(n);
    std::vector<double> radii(n);
    for (std::size_t i = 0; i < n; ++i) {
        centers[i] = (curve.edge_start(i) + curve.edge_end(i)) * 0.5;
        radii[i] = 0.5 * curve.edge_length(i);
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        // Edge n-1 is adjacent to edge 0; skip that wrap-around pair.
        std::size_t j_end = (i == 0) ? n - 1 : n;
        for (std::size_t j = i + 2; j < j_end; ++j) {
            double lb = distance(centers[i], centers[j]) - radii[i] - radii[j];
            if (lb > cutoff) continue;
            double d = segment_segment_distance(curve.edge_start(i), curve.edge_end(i),
                                                curve.edge_start(j), curve.edge_end(j));
            if (d <= cutoff) {
                out.embedded = false;
                out.edge_a = static_cast<int>(i);
                out.edge_b = static_cast<int>(j);
                return out;
            }
        }
    }
    return out;
}

void validate_curve(const PolygonalCurve& curve, double tol) {
    std::size_t n = curve.vertex_count();
    if (n < 3) throw ValidationError("curve needs at least 3 vertices");
    double scale = bounding_box_diagonal(curve.vertices);
    if (scale <= 0.0) throw ValidationError("degenerate edge at index 0: all vertices coincide");
    for (std::size_t i = 0; i < n; ++i) {
        if (curve.edge_length(i) <= tol * scale) {
            std::ostringstream msg;
            msg << "degenerate edge at index " << i;
            throw ValidationError(msg.str());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (turning_cosine(curve, i) <= -1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "pi-turn vertex at index " << i << " (doubled-back edge pair)";
            throw ValidationError(msg.str());
        }
    }
    EmbeddingCheck check = is_embedded(curve, tol);
    if (!check.embedded) {
        std::ostringstream msg;
        msg << "self-intersection between edges " << check.edge_a << " and " << check.edge_b;
        throw ValidationError(msg.str());
    }
}

PolygonalCurve parse_curve_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ValidationError("parse error: expected object with a \"vertices\" array");

    PolygonalCurve curve;
    if (j.contains("name") && j["name"].is_string()) curve.name = j["name"].get<std::string>();
    if (j.contains("knot_type") && j["knot_type"].is_string())
        curve.claimed_knot_type = j["knot_type"].get<std::string>();
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() ||
            !row[2].is_number())
            throw ValidationError("parse error: vertex rows must be [x, y, z] numbers");
        curve.vertices.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    validate_curve(curve);
    return curve;
}

PolygonalCurve load_curve(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open curve file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_json(buf.str());
}

std::string curve_to_json(const PolygonalCurve& curve) {
    nlohmann::json j;
    if (!curve.name.empty()) j["name"] = curve.name;
    if (!curve.claimed_knot_type.empty()) j["knot_type"] = curve.claimed_knot_type;
    j["vertices"] = nlohmann::json::array();
    for (const Vec3& v : curve.vertices) j["vertices"].push_back({v.x, v.y, v.z});
    return j.dump(2);
}

void save_curve(const std::string& path, const PolygonalCurve& curve) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write curve file: " + path);
    out << curve_to_json(curve) << "\n";
}

double length(const PolygonalCurve& curve) {
    double total = 0.0;
    for (std::size_t i = 0; i < curve.edge_count(); ++i) total += curve.edge_length(i);
    return total;
}

PolygonalCurve transform(const PolygonalCurve& curve, const Isometry& g, double scale) {
    if (!(scale > 0.0)) throw ValidationError("transform scale must be positive");
    g.validate();
    PolygonalCurve out = curve;
    for (Vec3& v : out.vertices) v = g.rotation.apply(v) * scale + g.translation;
    return out;
}

Vec3 arclength_barycenter(const PolygonalCurve& curve) {
    Vec3 acc{0, 0, 0};
    double total = 0.0;
    for (std::size_t i = 0; i < curve.edge_count(); ++i) {
        double len = curve.edge_length(i);
        Vec3 mid = (curve.edge_start(i) + curve.edge_end(i)) * 0.5;
        acc += mid * len;
        total += len;
    }
    return acc / total;
}

std::vector<double> arclength_prefix(const PolygonalCurve& curve) {
    std::vector<double> prefix(curve.vertex_count() + 1, 0.0);
    for (std::size_t i = 0; i < curve.edge_count(); ++i)
        prefix[i + 1] = prefix[i] + curve.edge_length(i);
    return prefix;
}

}  // namespace knotpack
