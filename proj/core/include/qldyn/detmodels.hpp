#pragma once

#include <cstdint>
#include <vector>

#include "qldyn/game.hpp"
#include "qldyn/policy.hpp"
#include "qldyn/stochastic.hpp"

namespace qldyn {

// The three deterministic approximations of the stochastic learners:
// the continuous-time replicator flow (FAQL), the infinite-batch policy map
// (BQL), and the choice-probability-aware Q-space map (CPA).
enum class ModelKind { kFaqlOde, kBqlMap, kCpaMap };

// Selection-term variant of the replicator flow. The policy-weighted average
// payoff is the standard replicator form and the default; the unweighted sum
// is exposed for comparison only (its rest points do not coincide with the
// logit equilibrium).
enum class ReplicatorPayoffTerm { kPolicyWeighted, kUnweightedSum };

// Replicator flow of the policies:
//   dpi_a/dt = (alpha/T) pi_a (E R_a - sum_b pi_b E R_b)
//            + alpha pi_a sum_b pi_b ln(pi_b / pi_a).
// Requires a strictly interior policy (the entropy term has a log
// singularity on the boundary). Independent of gamma.
AgentVectors faql_vector_field(const PolicyPoint& pi, const GameSpec& game,
                               const AgentParamsPair& params,
                               ReplicatorPayoffTerm term = ReplicatorPayoffTerm::kPolicyWeighted);

// Fixed-step classical Runge-Kutta integration of the replicator flow.
// Each agent's row is renormalised after every step; the pre-normalisation
// drift must stay below 1e-9 per step or the integration halts with a
// diagnostic. Returns the policy after each step, paired with model time.
std::vector<std::pair<double, PolicyPoint>> integrate_faql(
    const PolicyPoint& pi0, const GameSpec& game, const AgentParamsPair& params,
    double step, std::int64_t n_steps,
    ReplicatorPayoffTerm term = ReplicatorPayoffTerm::kPolicyWeighted);

// Infinite-batch policy map in the update timescale:
//   pi'_a = pi_a exp(alpha D_a / T) / sum_b pi_b exp(alpha D_b / T),
//   D_a   = E R_a - T ln pi_a.
// Computed in log space with a max-shift; independent of gamma.
PolicyPoint bql_map_step(const PolicyPoint& pi, const GameSpec& game,
                         const AgentParamsPair& params);

// Choice-probability-aware map on the full Q-space: every Q-value moves with
// its own update frequency as weight,
//   Q'_a = Q_a + alpha pi_a [ E R_a + gamma max_b Q_b - Q_a ],
// with pi the Boltzmann policy of the current state. This is the one-step
// conditional expectation of the incremental update; it cannot be reduced to
// policy space and it does depend on gamma.
QState cpa_map_step(const QState& state, const GameSpec& game,
                    const AgentParamsPair& params);

struct ModelRunConfig {
    GameSpec game;
    AgentParamsPair agents;
    PolicyPoint initial_policy;
    double q_base = 0.0;
    std::optional<QState> initial_q;
    ModelKind model = ModelKind::kCpaMap;
    std::uint64_t horizon = 1;  // map iterations / ODE steps
    std::uint64_t stride = 1;
    double step_size = 0.1;     // FAQL ODE only
    ReplicatorPayoffTerm payoff_term = ReplicatorPayoffTerm::kPolicyWeighted;

    void validate() const;
    QState resolve_initial_q() const;
};

// Drives one of the three models and records a stride-thinned trajectory in
// the same schema as the stochastic simulators. For the policy-space models
// the Q columns carry the zero-mean Q realisation of the policy; for the ODE
// the step field carries accumulated model time.
Trajectory run_model(const ModelRunConfig& config);

}  // namespace qldyn
