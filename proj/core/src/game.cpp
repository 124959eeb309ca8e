#include "qldyn/game.hpp"

#include <algorithm>
#include <cmath>

#include "qldyn/errors.hpp"

namespace qldyn {

namespace {

void check_probability_vector(std::span<const double> p, int expected_size) {
    if (static_cast<int>(p.size()) != expected_size) {
        throw DomainError("policy size does not match the opponent's action count");
    }
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("policy entry outside [0, 1]");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw DomainError("policy does not sum to 1 within 1e-12");
    }
}

}  // namespace

void GameSpec::validate() const {
    for (int agent = 0; agent < kNumAgents; ++agent) {
        const int own = num_actions(agent);
        const int opp = static_cast<int>(action_labels[1 - agent].size());
        if (own < 2) {
            throw DomainError("each agent needs at least two actions");
        }
        if (static_cast<int>(rewards[agent].size()) != own) {
            throw DomainError("reward tensor rows inconsistent with action labels");
        }
        for (const auto& row : rewards[agent]) {
            if (static_cast<int>(row.size()) != opp) {
                throw DomainError("reward tensor columns inconsistent with opponent actions");
            }
            for (double r : row) {
                if (!std::isfinite(r)) {
                    throw DomainError("non-finite payoff");
                }
            }
        }
    }
}

double GameSpec::min_reward() const {
    double m = rewards[0][0][0];
    for (const auto& per_agent : rewards) {
        for (const auto& row : per_agent) {
            for (double r : row) m = std::min(m, r);
        }
    }
    return m;
}

double GameSpec::max_reward() const {
    double m = rewards[0][0][0];
    for (const auto& per_agent : rewards) {
        for (const auto& row : per_agent) {
            for (double r : row) m = std::max(m, r);
        }
    }
    return m;
}

GameSpec make_game(std::array<std::vector<std::string>, kNumAgents> action_labels,
                   const std::array<std::vector<double>, kNumAgents>& flat_payoffs) {
    GameSpec game;
    game.action_labels = std::move(action_labels);
    for (int agent = 0; agent < kNumAgents; ++agent) {
        const std::size_t own = game.action_labels[agent].size();
        const std::size_t opp = game.action_labels[1 - agent].size();
        if (flat_payoffs[agent].size() != own * opp) {
            throw DomainError("payoff block size does not match action counts");
        }
        game.rewards[agent].resize(own);
        for (std::size_t a = 0; a < own; ++a) {
            game.rewards[agent][a].assign(flat_payoffs[agent].begin() + a * opp,
                                          flat_payoffs[agent].begin() + (a + 1) * opp);
        }
    }
    game.validate();
    return game;
}

GameSpec prisoners_dilemma() {
    // Per-agent payoffs in (own action, opponent action) order; the matrix is
    // the same for both agents by symmetry of the dilemma.
    return make_game({std::vector<std::string>{"C", "D"}, std::vector<std::string>{"C", "D"}},
                     {std::vector<double>{3.0, 0.0, 5.0, 1.0},
                      std::vector<double>{3.0, 0.0, 5.0, 1.0}});
}

double expected_reward(const GameSpec& game, int agent, int action,
                       std::span<const double> opponent_policy) {
    check_probability_vector(opponent_policy, game.num_actions(1 - agent));
    const auto& row = game.rewards[agent][action];
    double e = 0.0;
    for (std::size_t b = 0; b < row.size(); ++b) {
        e += opponent_policy[b] * row[b];
    }
    return e;
}

std::vector<double> expected_rewards(const GameSpec& game, int agent,
                                     std::span<const double> opponent_policy) {
    check_probability_vector(opponent_policy, game.num_actions(1 - agent));
    std::vector<double> e(game.num_actions(agent), 0.0);
    for (int a = 0; a < game.num_actions(agent); ++a) {
        const auto& row = game.rewards[agent][a];
        for (std::size_t b = 0; b < row.size(); ++b) {
            e[a] += opponent_policy[b] * row[b];
        }
    }
    return e;
}

}  // namespace qldyn
