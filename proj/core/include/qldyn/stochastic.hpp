#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qldyn/game.hpp"
#include "qldyn/policy.hpp"
#include "qldyn/rng.hpp"

namespace qldyn {

struct AgentParams {
    double alpha;        // learning rate, [0,1)
    double gamma;        // discount factor, [0,1)
    double temperature;  // Boltzmann temperature, > 0
    double beta = 0.0;   // FAQL frequency cap, [0,1); unused elsewhere

    // Throws DomainError when out of domain; beta checked only if requested.
    void validate(bool requires_beta = false) const;
};

using AgentParamsPair = std::array<AgentParams, kNumAgents>;

enum class Algorithm { kIql, kFaql, kBatch };

struct RunConfig {
    GameSpec game;
    AgentParamsPair agents;
    PolicyPoint initial_policy;
    double q_base = 0.0;
    std::optional<QState> initial_q;  // overrides initial_policy/q_base when set
    std::uint64_t horizon = 1;        // total steps (batch: update steps)
    std::uint64_t stride = 1;         // record every stride-th step
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::kIql;
    std::uint64_t batch_size = 1;     // K, batch algorithm only
    bool record_actions = false;

    void validate() const;
    QState resolve_initial_q() const;
};

struct TrajectorySample {
    double step;  // step index; exact for any index below 2^53
    QState q;
    PolicyPoint pi;
};

// Stride-thinned recording of a run. Samples are taken after steps
// stride, 2*stride, ...; the initial state is not recorded. The stored
// policy always equals boltzmann_policy of the stored Q-state.
struct Trajectory {
    std::uint64_t stride = 1;
    std::vector<TrajectorySample> samples;
    // Joint action taken at each recorded step; filled when requested.
    std::vector<std::array<int, kNumAgents>> joint_actions;
};

struct StepResult {
    QState next;
    std::array<int, kNumAgents> actions;
    PerAgent rewards;
};

// One step of incremental independent Q-learning: each agent samples an
// action from its Boltzmann policy, then updates only the chosen action's
// Q-value by alpha * (r + gamma * max_b Q_b - Q_a). The max is over values,
// so ties need no break rule. Agents draw in index order (one uniform each).
StepResult iql_step(const QState& state, const GameSpec& game,
                    const AgentParamsPair& params, RandomSource& rng);

// Frequency-adjusted variant: the learning rate of the played action a is
// scaled by min(beta / pi_a, 1).
StepResult faql_step(const QState& state, const GameSpec& game,
                     const AgentParamsPair& params, RandomSource& rng);

// Deterministic cores of the two updates, exposed so forced-action
// sequences can be replayed exactly.
QState apply_iql_update(const QState& state, const GameSpec& game,
                        const AgentParamsPair& params,
                        const std::array<int, kNumAgents>& actions);
QState apply_faql_update(const QState& state, const GameSpec& game,
                         const AgentParamsPair& params,
                         const std::array<int, kNumAgents>& actions,
                         const PolicyPoint& policy);

// Batch update: plays K joint actions under the frozen `policies`,
// accumulates per-action TD errors bootstrapped on the Q-values frozen at
// batch start, divides by max(1, visit count) and applies one alpha-scaled
// update per Q-value. Actions never played keep their Q-value unchanged.
QState batch_update(const QState& state, const GameSpec& game,
                    const PolicyPoint& policies, std::uint64_t batch_size,
                    const AgentParamsPair& params, RandomSource& rng);

// Runs a configured simulation. Deterministic: the result is a pure
// function of the config (the RNG stream is derived from config.seed).
Trajectory run(const RunConfig& config);

struct EnsembleGroup {
    double weight = 0.0;  // fraction of runs in this group
    int run_count = 0;
    bool below_diagonal = false;  // final pi1_C + pi2_C < 1
    std::vector<double> steps;
    std::vector<PolicyPoint> mean_policy;  // time-pointwise mean
};

struct EnsembleResult {
    int n_runs = 0;
    std::vector<EnsembleGroup> groups;
};

// Runs n_runs seeds derived from (config.seed, run index), partitions the
// runs by where they end relative to the anti-diagonal of policy space
// (pi1_C + pi2_C below/above 1) and averages each group pointwise in time.
// Runs execute on up to `jobs` worker threads.
EnsembleResult ensemble_grouped_mean(const RunConfig& config, int n_runs, int jobs = 1);

// Convenience for a family of initialisations sharing the grouping protocol.
std::vector<EnsembleResult> ensemble_grouped_mean(std::span<const RunConfig> configs,
                                                  int n_runs, int jobs = 1);

}  // namespace qldyn
