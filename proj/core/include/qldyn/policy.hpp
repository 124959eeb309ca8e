#pragma once

#include <array>
#include <vector>

#include "qldyn/game.hpp"

namespace qldyn {

using PerAgent = std::array<double, kNumAgents>;
using AgentVectors = std::array<std::vector<double>, kNumAgents>;

// Full system state: one Q-value per (agent, action). For the 2x2 case this
// is the four-dimensional vector (Q1_C, Q1_D, Q2_C, Q2_D).
struct QState {
    AgentVectors q;

    double& at(int agent, int action) { return q[agent][action]; }
    double at(int agent, int action) const { return q[agent][action]; }
    bool operator==(const QState&) const = default;
};

// Joint mixed policy; pi[agent][action] is a probability. The 2D projection
// of the system state: (pi1_C, pi2_C) once normalisation is accounted for.
struct PolicyPoint {
    AgentVectors pi;

    double at(int agent, int action) const { return pi[agent][action]; }
    double cooperation(int agent) const { return pi[agent][kCooperate]; }
    bool operator==(const PolicyPoint&) const = default;
};

QState make_qstate(std::vector<double> q1, std::vector<double> q2);
PolicyPoint make_policy(std::vector<double> pi1, std::vector<double> pi2);

// 2x2 convenience: joint policy from the two cooperation probabilities.
PolicyPoint policy_from_cooperation(double pi1_c, double pi2_c);

// Throws DomainError unless every row is a probability vector
// (entries within [0,1], rows summing to 1 within 1e-12).
void validate_policy(const PolicyPoint& policy);

// Softmax over Q-values with per-agent temperature T > 0, computed with a
// max-shift so no overflow occurs even for |Q|/T of order 1e6.
// pi[a] = exp(Q[a]/T) / sum_b exp(Q[b]/T).
PolicyPoint boltzmann_policy(const QState& state, const PerAgent& temperatures);

// Single-agent softmax; building block shared with the simulators.
std::vector<double> boltzmann_row(std::span<const double> q, double temperature);

// Cooperation probability of a 2-action agent from the Q-value difference
// delta_q = Q_D - Q_C:  1 / (1 + exp(delta_q / T)).
double cooperation_from_delta_q(double delta_q, double temperature);

// Inverts the softmax on an affine slice of Q-space: produces the Q-state
// with per-agent mean q_base that maps to `initial_policy` under
// boltzmann_policy. For two actions this is
//   Q_C = q_base - dQ/2,  Q_D = q_base + dQ/2,  dQ = T ln((1-pi_C)/pi_C).
// Policies on the boundary (0 or 1 entries) are rejected: they are
// unreachable under any finite temperature.
QState init_q_from_policy(const PolicyPoint& initial_policy, double q_base,
                          const PerAgent& temperatures);

}  // namespace qldyn
