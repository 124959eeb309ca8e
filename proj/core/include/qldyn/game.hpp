#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace qldyn {

inline constexpr int kNumAgents = 2;

// Action indices for the 2x2 social-dilemma convention.
inline constexpr int kCooperate = 0;
inline constexpr int kDefect = 1;

// Two-player normal-form game in a single state. Rewards are indexed as
// rewards[agent][own_action][opponent_action]. Immutable after construction;
// safe to share across threads.
struct GameSpec {
    std::array<std::vector<std::string>, kNumAgents> action_labels;
    std::array<std::vector<std::vector<double>>, kNumAgents> rewards;

    int num_actions(int agent) const { return static_cast<int>(action_labels[agent].size()); }
    double reward(int agent, int own, int opp) const { return rewards[agent][own][opp]; }

    double min_reward() const;
    double max_reward() const;

    // Throws DomainError on non-finite payoffs, <2 actions, or shape mismatch.
    void validate() const;
};

// Builds a validated game from per-agent payoff matrices, each row-major in
// (own action, opponent action).
GameSpec make_game(std::array<std::vector<std::string>, kNumAgents> action_labels,
                   const std::array<std::vector<double>, kNumAgents>& flat_payoffs);

// The canonical Prisoner's Dilemma: actions (C, D), payoffs (3,3) (0,5) (5,0) (1,1).
GameSpec prisoners_dilemma();

// Expected own reward of `action` against a mixed opponent policy:
// sum_b policy[b] * R[agent][action][b]. The policy must be a probability
// vector (entries in [0,1], summing to 1 within 1e-12).
double expected_reward(const GameSpec& game, int agent, int action,
                       std::span<const double> opponent_policy);

// Expected rewards for every own action at once.
std::vector<double> expected_rewards(const GameSpec& game, int agent,
                                     std::span<const double> opponent_policy);

}  // namespace qldyn
