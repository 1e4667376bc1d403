#pragma once

#include <span>
#include <vector>

namespace pmrank {

struct RolloutOutcome {
    double predicted_margin = 0.0;
    double target_margin = 0.0;
    bool format_valid = false;
};

struct RewardConfig {
    double alpha = 1.0;         // sensitivity to squared margin error
    double format_bonus = 0.2;  // added when the rollout is well-formed
    double eps_std = 1e-4;

    void validate() const;
};

// Mean squared difference between predicted and target margins.
double margin_mse(std::span<const double> predicted, std::span<const double> targets);

// exp(-alpha * (predicted - target)^2), plus format_bonus when format_valid.
double rollout_reward(const RolloutOutcome& outcome, const RewardConfig& config = {});

// (R_g - mean) / (population std + eps_std) within one rollout group.
std::vector<double> group_advantages(std::span<const double> rewards, double eps_std = 1e-4);

}  // namespace pmrank
