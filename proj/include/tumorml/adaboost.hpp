#pragma once

#include <span>
#include <vector>

#include "tumorml/tree.hpp"

namespace tumorml {

/// Discrete AdaBoost over depth-1 weighted-Gini stumps.
struct AdaBoostModel {
    std::vector<DecisionTreeModel> stumps;
    std::vector<double> alphas;
    std::vector<double> stump_errors;  // weighted err of each accepted round
    int rounds = 0;                    // requested rounds; stumps may stop short
};

/// Boosting rounds: fit a stump on the current weights, err = sum of
/// misclassified weight, alpha = ln((1-err)/err)/2, reweight by
/// exp(-alpha*y*h) and renormalize. A perfect stump (err <= 1e-10) is kept
/// with alpha capped at 10 and stops the loop; err >= 0.5 discards the stump
/// and stops. Requires both classes present.
AdaBoostModel fit_adaboost(const Matrix& X, std::span<const int> y, int rounds = 50);

/// sign(sum alpha_t h_t(x)) mapped back to {0,1}; a zero sum predicts 0.
int predict(const AdaBoostModel& model, std::span<const double> x);

}  // namespace tumorml
