#ifndef KNOTPACK_ANNEAL_HPP
#define KNOTPACK_ANNEAL_HPP

#include <cstdint>
#include <vector>

#include "knotpack/invariants.hpp"

namespace knotpack {

// All three objectives are scale-invariant, so annealing never needs a
// per-knot scale schedule.
enum class AnnealObjective { Rop, Rho, CRad };

std::string objective_name(AnnealObjective objective);
AnnealObjective parse_objective(const std::string& text);

struct AnnealConfig {
    AnnealObjective objective = AnnealObjective::Rop;
    std::int64_t steps = 100000;
    double initial_temperature = 0.0;    // <= 0 means auto: 0.1 * objective(P0)
    double cooling_rate = 0.995;         // applied once per epoch of n proposals
    double step_sigma = 0.02;            // move stddev as fraction of current diameter
    std::uint64_t seed = 1;
    std::int64_t renormalize_every = 0;  // 0 disables renormalization to thickness 1
    int chains = 1;
    int threads = 1;
    int audit_target = 128;              // approximate number of stored states per chain
    QuadratureConfig quadrature{};

    void validate() const;
};

struct TraceRow {
    std::int64_t step = 0;
    double value = 0.0;
    double temperature = 0.0;
    bool accepted = false;
};

struct ChainResult {
    std::vector<TraceRow> trace;
    std::int64_t moves_rejected_isotopy = 0;
    std::int64_t moves_accepted = 0;
    double best_value = 0.0;
    PolygonalCurve best_curve;
    // Subsample of accepted states kept for post-hoc embeddedness audits.
    std::vector<PolygonalCurve> audit_states;
    bool frozen = false;  // some full epoch saw zero accepted moves
};

struct AnnealResult {
    PolygonalCurve best_curve;
    double best_value = 0.0;
    int winning_chain = 0;
    std::vector<TraceRow> trace;  // the winning chain's trace
    std::int64_t moves_rejected_isotopy = 0;  // total over chains
    bool frozen_warning = false;
    InvariantReport final_report;
    std::vector<ChainResult> chains;
};

// True iff replacing vertex i by newpos is provably isotopy-safe: the moved
// curve is embedded, and neither triangle swept by the two incident edges
// intersects any edge not incident to vertex i. Contact exactly at a shared
// corner vertex is allowed; anything closer than the embeddedness tolerance
// elsewhere rejects the move (conservative: a rejected move costs one
// proposal, a wrongly accepted one changes the knot type).
bool isotopy_safe_move(const PolygonalCurve& curve, std::size_t i, const Vec3& newpos,
                       double tol = kEmbedTol);

// Metropolis annealing over single-vertex Gaussian moves filtered by
// isotopy_safe_move, with geometric cooling per epoch of n proposals.
// Deterministic given (P0, functional, cfg); chains run independently from
// derived seeds and the best one wins (ties to the lowest chain index).
AnnealResult anneal(const PolygonalCurve& start, const SizeFunctionalSpec& functional,
                    const AnnealConfig& cfg);

// Runs three independent campaigns (objectives Rop, Rho, CRad) from the same
// start with distinct derived seeds, then evaluates all three winners under
// all three quantities and reports the minima. Because the minima are taken
// over a common set of representatives, slack = rop_hat - rho_hat*crad_hat
// is nonnegative up to roundoff. All outputs are empirical upper bounds on
// the fixed-n knot-level invariants, never attained infima.
struct KnotLevelEstimate {
    double rho_n_hat = 0.0;
    double crad_n_hat = 0.0;
    double rop_n_hat = 0.0;
    double slack = 0.0;
    InvariantReport rop_winner;
    InvariantReport rho_winner;
    InvariantReport crad_winner;
};
KnotLevelEstimate estimate_knot_level(const PolygonalCurve& start,
                                      const SizeFunctionalSpec& functional,
                                      const AnnealConfig& cfg);

}  // namespace knotpack

#endif  // KNOTPACK_ANNEAL_HPP
