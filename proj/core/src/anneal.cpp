#include "knotpack/anneal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "knotpack/errors.hpp"
#include "knotpack/rng.hpp"
#include "knotpack/thickness.hpp"

namespace knotpack {

namespace {

double objective_value(const PolygonalCurve& curve, AnnealObjective objective,
                       const SizeFunctionalSpec& functional, const QuadratureConfig& quad) {
    switch (objective) {
        case AnnealObjective::Rop: return length(curve) / thickness_value(curve);
        case AnnealObjective::Rho: return length(curve) / evaluate_size(functional, curve, quad);
        case AnnealObjective::CRad:
            return evaluate_size(functional, curve, quad) / thickness_value(curve);
    }
    throw ValidationError("unknown annealing objective");
}

// Contact is tolerated only within this fraction of the embeddedness cutoff
// around a shared corner; legitimately embedded strands stay a full cutoff
// away from the corner, so nothing real can hide inside the window.
constexpr double kCornerWindow = 0.1;

bool triangle_clear(const PolygonalCurve& curve, const Vec3& t0, const Vec3& t1, const Vec3& t2,
                    std::size_t skip_a, std::size_t skip_b, std::size_t corner_edge,
                    const Vec3& corner, double cutoff) {
    const std::size_t n = curve.edge_count();
    for (std::size_t j = 0; j < n; ++j) {
        if (j == skip_a || j == skip_b) continue;
        SegmentTriangleClosest c =
            closest_segment_triangle(curve.edge_start(j), curve.edge_end(j), t0, t1, t2);
        if (c.dist >= cutoff) continue;
        if (j == corner_edge && distance(c.on_segment, corner) < kCornerWindow * cutoff &&
            distance(c.on_triangle, corner) < kCornerWindow * cutoff)
            continue;
        return false;
    }
    return true;
}

struct ChainSetup {
    const PolygonalCurve* start;
    const SizeFunctionalSpec* functional;
    const AnnealConfig* cfg;
    std::uint64_t seed;
};

ChainResult run_chain(const ChainSetup& setup) {
    const AnnealConfig& cfg = *setup.cfg;
    const SizeFunctionalSpec& functional = *setup.functional;
    PolygonalCurve state = *setup.start;
    const std::size_t n = state.vertex_count();
    SplitMix64 rng(setup.seed);

    ChainResult out;
    out.trace.reserve(static_cast<std::size_t>(cfg.steps));

    double f = objective_value(state, cfg.objective, functional, cfg.quadrature);
    double temperature =
        cfg.initial_temperature > 0.0 ? cfg.initial_temperature : 0.1 * f;
    double sigma = cfg.step_sigma * diameter(state);

    out.best_value = f;
    out.best_curve = state;

    // State snapshots at fixed step checkpoints: ~audit_target per run no
    // matter the acceptance rate. Every snapshot is an accepted state (or
    // the validated start), kept for post-hoc embeddedness audits.
    const std::int64_t audit_stride =
        std::max<std::int64_t>(1, cfg.steps / std::max(1, cfg.audit_target));

    std::int64_t accepted_in_epoch = 0;
    std::int64_t proposals_in_epoch = 0;

    for (std::int64_t step = 0; step < cfg.steps; ++step) {
        std::size_t idx = static_cast<std::size_t>(rng.uniform_int(n));
        Vec3 delta{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        Vec3 newpos = state.vertices[idx] + delta * sigma;

        bool accepted = false;
        if (isotopy_safe_move(state, idx, newpos)) {
            Vec3 old = state.vertices[idx];
            state.vertices[idx] = newpos;
            double f_new = objective_value(state, cfg.objective, functional, cfg.quadrature);
            double diff = f_new - f;
            if (diff <= 0.0 || rng.uniform01() < std::exp(-diff / temperature)) {
                accepted = true;
                f = f_new;
                sigma = cfg.step_sigma * diameter(state);
                ++out.moves_accepted;
                ++accepted_in_epoch;
                if (f < out.best_value) {
                    out.best_value = f;
                    out.best_curve = state;
                }
            } else {
                state.vertices[idx] = old;
            }
        } else {
            ++out.moves_rejected_isotopy;
        }
        out.trace.push_back({step, f, temperature, accepted});
        if ((step + 1) % audit_stride == 0) out.audit_states.push_back(state);

        if (++proposals_in_epoch == static_cast<std::int64_t>(n)) {
            if (accepted_in_epoch == 0) out.frozen = true;
            temperature *= cfg.cooling_rate;
            proposals_in_epoch = 0;
            accepted_in_epoch = 0;
        }

        if (cfg.renormalize_every > 0 && (step + 1) % cfg.renormalize_every == 0) {
            double thi = thickness_value(state);
            Vec3 center = arclength_barycenter(state);
            for (Vec3& v : state.vertices) v = (v - center) / thi;
            f = objective_value(state, cfg.objective, functional, cfg.quadrature);
            sigma = cfg.step_sigma * diameter(state);
        }
    }
    if (out.audit_states.empty() || !(out.audit_states.back().vertices == state.vertices))
        out.audit_states.push_back(state);
    return out;
}

}  // namespace

std::string objective_name(AnnealObjective objective) {
    switch (objective) {
        case AnnealObjective::Rop: return "rop";
        case AnnealObjective::Rho: return "rho";
        case AnnealObjective::CRad: return "crad";
    }
    return "rop";
}

AnnealObjective parse_objective(const std::string& text) {
    if (text == "rop") return AnnealObjective::Rop;
    if (text == "rho") return AnnealObjective::Rho;
    if (text == "crad") return AnnealObjective::CRad;
    throw ValidationError("unknown objective \"" + text + "\" (expected rop|rho|crad)");
}

void AnnealConfig::validate() const {
    if (steps < 1) throw ValidationError("annealing needs steps >= 1");
    if (!(cooling_rate > 0.0 && cooling_rate < 1.0))
        throw ValidationError("cooling_rate must lie in (0,1)");
    if (!(step_sigma > 0.0)) throw ValidationError("step_sigma must be positive");
    if (chains < 1) throw ValidationError("chains must be >= 1");
    if (threads < 1) throw ValidationError("threads must be >= 1");
    quadrature.validate();
}

bool isotopy_safe_move(const PolygonalCurve& curve, std::size_t i, const Vec3& newpos,
                       double tol) {
    const std::size_t n = curve.vertex_count();
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    const std::size_t prev2 = (i + n - 2) % n;

    const Vec3& vp = curve.vertex(prev);
    const Vec3& vi = curve.vertex(i);
    const Vec3& vn = curve.vertex(next);

    double scale = bounding_box_diagonal(curve.vertices);
    scale = std::max({scale, distance(newpos, vp), distance(newpos, vn)});
    const double cutoff = tol * scale;

    // New incident edges must be nondegenerate and introduce no pi-turns.
    Vec3 ea = newpos - vp;  // replaces edge prev
    Vec3 eb = vn - newpos;  // replaces edge i
    if (norm(ea) <= cutoff || norm(eb) <= cutoff) return false;
    auto antiparallel = [](const Vec3& u, const Vec3& w) {
        double d = norm(u) * norm(w);
        return d <= 0.0 || dot(u, w) / d <= -1.0 + 1e-12;
    };
    if (antiparallel(curve.edge_vector(prev2), ea)) return false;
    if (antiparallel(ea, eb)) return false;
    if (antiparallel(eb, curve.edge_vector(next))) return false;

    // Moved-curve embeddedness, localized: unchanged edges stay pairwise
    // clear by the precondition, so only the two new edges need testing.
    for (std::size_t j = 0; j < n; ++j) {
        if (j != prev2 && j != prev && j != i) {
            if (segment_segment_distance(vp, newpos, curve.edge_start(j), curve.edge_end(j)) <=
                cutoff)
                return false;
        }
        if (j != prev && j != i && j != next) {
            if (segment_segment_distance(newpos, vn, curve.edge_start(j), curve.edge_end(j)) <=
                cutoff)
                return false;
        }
    }

    // Swept triangles must not meet any edge not incident to vertex i. The
    // edges touching the triangles at v_{i-1} / v_{i+1} are exempted within a
    // corner window around that vertex only.
    if (!triangle_clear(curve, vp, vi, newpos, prev, i, prev2, vp, cutoff)) return false;
    if (!triangle_clear(curve, vi, newpos, vn, prev, i, next, vn, cutoff)) return false;
    return true;
}

AnnealResult anneal(const PolygonalCurve& start, const SizeFunctionalSpec& functional,
                    const AnnealConfig& cfg) {
    cfg.validate();
    functional.validate();
    validate_curve(start);

    SplitMix64 root(cfg.seed);
    std::vector<ChainSetup> setups(cfg.chains);
    for (int c = 0; c < cfg.chains; ++c)
        setups[c] = {&start, &functional, &cfg, root.derive(static_cast<std::uint64_t>(c)).next()};

    std::vector<ChainResult> chains(cfg.chains);
    int workers = std::min(cfg.threads, cfg.chains);
    if (workers <= 1) {
        for (int c = 0; c < cfg.chains; ++c) chains[c] = run_chain(setups[c]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next_chain{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (;;) {
                    int c = next_chain.fetch_add(1);
                    if (c >= cfg.chains) return;
                    chains[c] = run_chain(setups[c]);
                }
            });
        for (auto& t : pool) t.join();
    }

    AnnealResult out;
    out.winning_chain = 0;
    for (int c = 1; c < cfg.chains; ++c)
        if (chains[c].best_value < chains[out.winning_chain].best_value) out.winning_chain = c;
    const ChainResult& winner = chains[out.winning_chain];
    out.best_curve = winner.best_curve;
    out.best_value = winner.best_value;
    out.trace = winner.trace;
    for (const ChainResult& c : chains) {
        out.moves_rejected_isotopy += c.moves_rejected_isotopy;
        out.frozen_warning = out.frozen_warning || c.frozen;
    }
    out.best_curve.name = start.name.empty() ? "annealed" : start.name + "-annealed";
    out.best_curve.claimed_knot_type = start.claimed_knot_type;
    out.final_report = compute_invariants(out.best_curve, functional, cfg.quadrature);
    out.chains = std::move(chains);
    return out;
}

KnotLevelEstimate estimate_knot_level(const PolygonalCurve& start,
                                      const SizeFunctionalSpec& functional,
                                      const AnnealConfig& cfg) {
    SplitMix64 root(cfg.seed);
    auto campaign = [&](AnnealObjective objective, std::uint64_t stream) {
        AnnealConfig c = cfg;
        c.objective = objective;
        c.seed = root.derive(stream).next();
        return anneal(start, functional, c);
    };
    AnnealResult rop_run = campaign(AnnealObjective::Rop, 101);
    AnnealResult rho_run = campaign(AnnealObjective::Rho, 102);
    AnnealResult crad_run = campaign(AnnealObjective::CRad, 103);

    KnotLevelEstimate out;
    out.rop_winner = rop_run.final_report;
    out.rho_winner = rho_run.final_report;
    out.crad_winner = crad_run.final_report;
    // Minima over the common winner set: every winner satisfies
    // rop = rho*crad, so rop_hat >= rho_hat*crad_hat up to roundoff.
    out.rop_n_hat = std::min({out.rop_winner.rop, out.rho_winner.rop, out.crad_winner.rop});
    out.rho_n_hat = std::min({out.rop_winner.rho, out.rho_winner.rho, out.crad_winner.rho});
    out.crad_n_hat = std::min({out.rop_winner.crad, out.rho_winner.crad, out.crad_winner.crad});
    out.slack = out.rop_n_hat - out.rho_n_hat * out.crad_n_hat;
    return out;
}

}  // namespace knotpack
