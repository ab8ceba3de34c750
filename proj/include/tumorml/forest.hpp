#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tumorml/tree.hpp"

namespace tumorml {

struct ForestParams {
    int n_trees = 100;
    int max_depth = -1;
    int min_samples_split = 2;
    int features_per_split = 0;  // 0 = round(sqrt(n_features))
    bool bootstrap = true;       // test hook: off trains every tree on the full sample
};

struct RandomForestModel {
    std::vector<DecisionTreeModel> trees;
    std::vector<std::uint64_t> tree_seeds;
    ForestParams params;
};

/// Bagged CART trees: each tree sees a seeded bootstrap resample (n draws
/// with replacement) and a fresh feature subsample at every node.
/// Deterministic given the seed.
RandomForestModel fit_random_forest(const Matrix& X, std::span<const int> y,
                                    const ForestParams& params = {},
                                    std::uint64_t seed = 0);

/// Majority vote over the trees; an exact tie predicts 0.
int predict(const RandomForestModel& model, std::span<const double> x);

}  // namespace tumorml
