#pragma once

#include <span>
#include <vector>

#include "tumorml/matrix.hpp"
#include "tumorml/rng.hpp"

namespace tumorml {

/// One node of a CART tree. Internal nodes route samples with
/// feature value <= threshold to the left child; leaves (feature == -1)
/// carry the majority label and the weighted class totals.
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;   // child indices into DecisionTreeModel::nodes
    int right = -1;
    int label = 0;
    double count0 = 0.0;
    double count1 = 0.0;

    bool is_leaf() const { return feature < 0; }
};

struct DecisionTreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::size_t n_features = 0;
};

struct TreeFitOptions {
    int max_depth = -1;          // -1 = unlimited
    int min_samples_split = 2;
    int features_per_split = 0;  // 0 = consider every feature
};

/// Gini impurity 1 - p0^2 - p1^2 of a non-empty binary label multiset.
double gini(std::span<const int> labels);

/// Greedy CART on (weighted) Gini impurity. Candidate thresholds are
/// midpoints between consecutive distinct sorted values; impurity ties keep
/// the first candidate in (feature, threshold) scan order. Splits with zero
/// impurity reduction are taken, so consistent data is always fit exactly
/// when depth is unlimited. Leaf ties predict 0.
///
/// `weights` empty means uniform. `rng` is only consulted when
/// features_per_split limits the candidate features (random forests).
DecisionTreeModel fit_decision_tree(const Matrix& X, std::span<const int> y,
                                    const TreeFitOptions& opt = {},
                                    std::span<const double> weights = {},
                                    Rng* rng = nullptr);

int predict(const DecisionTreeModel& model, std::span<const double> x);

}  // namespace tumorml
