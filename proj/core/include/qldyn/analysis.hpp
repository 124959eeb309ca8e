#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qldyn/detmodels.hpp"
#include "qldyn/game.hpp"
#include "qldyn/linalg.hpp"
#include "qldyn/policy.hpp"
#include "qldyn/stochastic.hpp"

namespace qldyn {

// Discrete-time fixed point taxonomy by eigenvalue moduli relative to the
// unit circle. kUnstableNode covers the all-real, all-expanding case so the
// classification is total.
enum class FixedPointClass {
    kStableNode,
    kStableFocus,
    kUnstableFocus,
    kSaddle,
    kUnstableNode,
    kNonhyperbolic,
};

std::string to_string(FixedPointClass c);

// Classifies a spectrum with hyperbolicity margin `tol` around |lambda| = 1:
//  - nonhyperbolic if any modulus lies within [1-tol, 1+tol];
//  - stable node / stable focus if all modul below 1-tol (focus when a
//    complex pair is present);
//  - unstable focus if the modulus-maximal eigenvalues are a complex pair
//    above 1+tol;
//  - saddle if the dominant pair is real with some modulus above 1+tol and
//    some below 1-tol; unstable node if nothing contracts.
FixedPointClass classify_fixed_point(std::span<const Complex> eigenvalues,
                                     double tol = 1e-8);

// Solves the logit self-consistency system
//   pi_a = exp(E R_a(pi_opp) / T) / sum_b exp(E R_b(pi_opp) / T)
// by damped fixed-point iteration (damping 0.5), with a bisection fallback
// on the 1D symmetric reduction for symmetric 2x2 games, polished by Newton
// with finite-difference derivatives. The returned policy has residual
// inf-norm <= 1e-12; otherwise NumericalError carries the last residual.
PolicyPoint solve_bql_fixed_point(const GameSpec& game, const PerAgent& temperatures);

// Q-space fixed point of the choice-probability-aware map:
//   Q*_a = E R_a(pi*_opp) + gamma/(1-gamma) max_b E R_b(pi*_opp),
// with pi* the logit fixed point; the two coincide in policy space since the
// bootstrap term is constant in the action. Requires gamma < 1.
QState solve_cpa_fixed_point(const GameSpec& game, const AgentParamsPair& params);

// Target Q-values of one agent against a fixed (possibly degenerate)
// opponent policy: E R_a + gamma/(1-gamma) max_b E R_b.
std::vector<double> target_q_values(const GameSpec& game, int agent,
                                    std::span<const double> opponent_policy,
                                    double gamma);

// Derivative of the joint soft-best-response map at a policy point, for
// 2-action games: zero diagonal, off-diagonal entries
//   dBR_i/dpi_opp = (R_CC - R_CD - R_DC + R_DD) * p q / (T (p+q)^2),
// with p = exp(E R_C / T), q = exp(E R_D / T). The game-dependent prefactor
// is computed from the payoffs. Note this is not the derivative of
// bql_map_step itself; the two are related by
//   d(bql_map_step) = (1-alpha) I + alpha * bql_jacobian,
// a tested identity (see tests/test_analysis.cpp).
Matrix bql_jacobian(const PolicyPoint& pi_star, const GameSpec& game,
                    const PerAgent& temperatures);

// Full derivative (identity included) of cpa_map_step at a state with
// Q_C < Q_D for both agents, assembled from the closed-form entries; valid
// on that max-branch only. Throws DomainError if the branch condition fails.
Matrix cpa_jacobian(const QState& q_star, const GameSpec& game,
                    const AgentParamsPair& params);

struct StabilityReport {
    PolicyPoint fixed_point_policy;
    std::optional<QState> fixed_point_q;  // CPA only
    Matrix jacobian;
    std::vector<Complex> eigenvalues;
    double spectral_radius = 0.0;
    FixedPointClass classification = FixedPointClass::kNonhyperbolic;
};

StabilityReport bql_stability(const GameSpec& game, const PerAgent& temperatures);
StabilityReport cpa_stability(const GameSpec& game, const AgentParamsPair& params);

struct CriticalGamma {
    double gamma_lo = 0.0;   // bracketing interval, width <= 1e-4
    double gamma_hi = 0.0;
    double gamma = 0.0;      // midpoint estimate
    bool complex_pair = false;  // true: Neimark-Sacker type crossing
};

struct BifurcationScan {
    std::vector<double> gamma_grid;
    std::vector<bool> solver_ok;
    std::vector<double> pi_c_star;        // projected fixed point, per gamma
    std::vector<std::vector<Complex>> eigenvalue_tracks;
    std::vector<double> spectral_radii;
    std::vector<FixedPointClass> classifications;
    std::vector<CriticalGamma> critical_gammas;
};

// Recomputes the CPA fixed point, Jacobian and spectrum on a gamma grid and
// locates every |lambda| = 1 crossing by bisection to a gamma interval of
// 1e-4, labelling a crossing as Neimark-Sacker when the crossing eigenvalues
// form a complex-conjugate pair. Solver failures flag the grid entry and the
// scan continues. Grid points are processed on up to `jobs` threads.
BifurcationScan bifurcation_scan(const GameSpec& game, const AgentParamsPair& params_template,
                                 std::span<const double> gamma_grid, int jobs = 1);

struct CycleParams {
    double amplitude_threshold = 1e-3;
    double spacing_tolerance = 0.05;  // relative spread of successive peak spacings
    int min_peaks = 4;
    // Moving-average width (samples) applied before peak detection;
    // 0 chooses max(1, n_post_settle / 200).
    std::size_t smooth_window = 0;
};

struct CycleFinding {
    bool found = false;
    double amplitude = 0.0;       // post-settle max - min of pi1_C
    double period_samples = 0.0;  // mean peak spacing, in sample units
    int peak_count = 0;
};

// Scans the post-settle pi1_C series for a sustained oscillation: amplitude
// above the threshold and successive peak spacings stable within the
// tolerance. Requires >= 1000 samples after the settle prefix.
CycleFinding detect_limit_cycle(std::span<const PolicyPoint> trajectory,
                                double settle_fraction,
                                const CycleParams& params = {});

struct MetastabilityParams {
    std::size_t window = 100;        // samples per window, >= 100
    double policy_tolerance = 1e-3;  // max projected policy movement per window
    double drift_threshold = 0.05;   // min |dQ| per window for the slow coordinate
    double monotone_fraction = 0.9;  // fraction of same-signed increments required
};

struct MetastableInterval {
    std::size_t begin_sample = 0;
    std::size_t end_sample = 0;
    double begin_step = 0.0;
    double end_step = 0.0;
    int agent = 0;   // slow coordinate
    int action = 0;
    double max_drift = 0.0;              // largest per-window drift observed
    PerAgent mean_cooperation{};         // average projected policy over the interval
};

// Finds windows where the projected policy is quiet while some Q coordinate
// drifts monotonically toward its current target value, and merges adjacent
// windows into intervals. The trajectory samples must carry both Q and
// policy (as produced by run / run_model).
std::vector<MetastableInterval> detect_metastability(
    std::span<const TrajectorySample> trajectory, const GameSpec& game,
    const AgentParamsPair& params, const MetastabilityParams& opts = {});

}  // namespace qldyn
