#include "pmrank/reward_kernel.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pmrank/errors.hpp"

namespace pmrank {

void RewardConfig::validate() const {
    if (!(alpha > 0.0)) throw InvalidInput("alpha must be > 0");
    if (!(format_bonus >= 0.0)) throw InvalidInput("format_bonus must be >= 0");
    if (!(eps_std > 0.0)) throw InvalidInput("eps_std must be > 0");
}

double margin_mse(std::span<const double> predicted, std::span<const double> targets) {
    if (predicted.size() != targets.size()) {
        throw InvalidInput("margin_mse length mismatch: " + std::to_string(predicted.size()) + " vs " +
                           std::to_string(targets.size()));
    }
    if (predicted.empty()) throw InvalidInput("margin_mse of an empty batch");
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (!std::isfinite(predicted[i]) || !std::isfinite(targets[i])) {
            throw InvalidInput("non-finite margin at index " + std::to_string(i));
        }
        const double d = predicted[i] - targets[i];
        sum += d * d;
    }
    return sum / static_cast<double>(predicted.size());
}

double rollout_reward(const RolloutOutcome& outcome, const RewardConfig& config) {
    config.validate();
    const double err = outcome.predicted_margin - outcome.target_margin;
    const double accuracy = std::exp(-config.alpha * err * err);
    return outcome.format_valid ? accuracy + config.format_bonus : accuracy;
}

std::vector<double> group_advantages(std::span<const double> rewards, double eps_std) {
    if (rewards.empty()) throw InvalidInput("group_advantages of an empty group");
    if (!(eps_std > 0.0)) throw InvalidInput("eps_std must be > 0");

    const double n = static_cast<double>(rewards.size());
    const double mean = std::accumulate(rewards.begin(), rewards.end(), 0.0) / n;
    std::vector<double> adv(rewards.size());
    for (std::size_t g = 0; g < rewards.size(); ++g) adv[g] = rewards[g] - mean;
    // second centering pass absorbs the rounding error of the first mean
    const double residual = std::accumulate(adv.begin(), adv.end(), 0.0) / n;
    double ss = 0.0;
    for (double& d : adv) {
        d -= residual;
        ss += d * d;
    }
    const double denom = std::sqrt(ss / n) + eps_std;
    for (double& d : adv) d /= denom;
    return adv;
}

}  // namespace pmrank
