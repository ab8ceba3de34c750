#include "tumorml/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tumorml {

double gini(std::span<const int> labels) {
    if (labels.empty()) throw std::invalid_argument("gini: empty input");
    double ones = 0.0;
    for (int v : labels) {
        if (v != 0 && v != 1) throw std::invalid_argument("gini: labels must be 0 or 1");
        ones += v;
    }
    const double p1 = ones / static_cast<double>(labels.size());
    const double p0 = 1.0 - p1;
    return 1.0 - p0 * p0 - p1 * p1;
}

namespace {

struct BestSplit {
    int feature = -1;
    double threshold = 0.0;
    double impurity = std::numeric_limits<double>::infinity();
};

class TreeBuilder {
public:
    TreeBuilder(const Matrix& X, std::span<const int> y, std::span<const double> w,
                const TreeFitOptions& opt, Rng* rng)
        : X_(X), y_(y), w_(w), opt_(opt), rng_(rng) {}

    std::vector<TreeNode> build() {
        std::vector<std::size_t> idx(X_.rows());
        std::iota(idx.begin(), idx.end(), 0);
        grow(idx, 0);
        return std::move(nodes_);
    }

private:
    double weight(std::size_t i) const { return w_.empty() ? 1.0 : w_[i]; }

    int make_leaf(double w0, double w1) {
        TreeNode leaf;
        leaf.label = w1 > w0 ? 1 : 0;  // tie predicts 0
        leaf.count0 = w0;
        leaf.count1 = w1;
        nodes_.push_back(leaf);
        return static_cast<int>(nodes_.size() - 1);
    }

    /// Candidate features for this node: every feature, or a seeded random
    /// subset, always scanned in ascending index order so impurity ties
    /// break identically no matter how candidates were chosen.
    void candidate_features(std::vector<int>& out) {
        const int k = static_cast<int>(X_.cols());
        const int m = opt_.features_per_split;
        out.clear();
        if (m <= 0 || m >= k) {
            out.resize(k);
            std::iota(out.begin(), out.end(), 0);
            return;
        }
        feature_pool_.resize(k);
        std::iota(feature_pool_.begin(), feature_pool_.end(), 0);
        for (int t = 0; t < m; ++t) {
            std::size_t j = t + rng_->uniform_index(k - t);
            std::swap(feature_pool_[t], feature_pool_[j]);
        }
        out.assign(feature_pool_.begin(), feature_pool_.begin() + m);
        std::sort(out.begin(), out.end());
    }

    BestSplit find_best_split(const std::vector<std::size_t>& idx, double w0, double w1) {
        BestSplit best;
        const double total = w0 + w1;

        std::vector<int> features;
        candidate_features(features);

        for (int f : features) {
            order_.assign(idx.begin(), idx.end());
            std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
                return X_(a, f) < X_(b, f);
            });

            double left0 = 0.0, left1 = 0.0;
            for (std::size_t pos = 0; pos + 1 < order_.size(); ++pos) {
                const std::size_t i = order_[pos];
                if (y_[i] == 1)
                    left1 += weight(i);
                else
                    left0 += weight(i);

                const double v = X_(i, f);
                const double v_next = X_(order_[pos + 1], f);
                if (!(v < v_next)) continue;  // thresholds only between distinct values

                const double wl = left0 + left1;
                const double wr = total - wl;
                const double gl = 1.0 - (left0 / wl) * (left0 / wl) - (left1 / wl) * (left1 / wl);
                const double r0 = w0 - left0, r1 = w1 - left1;
                const double gr = 1.0 - (r0 / wr) * (r0 / wr) - (r1 / wr) * (r1 / wr);
                const double impurity = (wl * gl + wr * gr) / total;

                if (impurity < best.impurity) {
                    double mid = (v + v_next) / 2.0;
                    if (!(mid < v_next)) mid = v;  // adjacent doubles: keep both sides non-empty
                    best = {f, mid, impurity};
                }
            }
        }
        return best;
    }

    int grow(const std::vector<std::size_t>& idx, int depth) {
        double w0 = 0.0, w1 = 0.0;
        for (std::size_t i : idx) (y_[i] == 1 ? w1 : w0) += weight(i);

        const bool pure = w0 == 0.0 || w1 == 0.0;
        const bool depth_capped = opt_.max_depth >= 0 && depth >= opt_.max_depth;
        if (pure || depth_capped || idx.size() < static_cast<std::size_t>(opt_.min_samples_split))
            return make_leaf(w0, w1);

        const BestSplit best = find_best_split(idx, w0, w1);
        if (best.feature < 0) return make_leaf(w0, w1);  // all candidate features constant

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : idx)
            (X_(i, best.feature) <= best.threshold ? left_idx : right_idx).push_back(i);

        const int node = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        nodes_[node].feature = best.feature;
        nodes_[node].threshold = best.threshold;
        nodes_[node].count0 = w0;
        nodes_[node].count1 = w1;
        nodes_[node].label = w1 > w0 ? 1 : 0;

        const int left = grow(left_idx, depth + 1);
        const int right = grow(right_idx, depth + 1);
        nodes_[node].left = left;
        nodes_[node].right = right;
        return node;
    }

    const Matrix& X_;
    std::span<const int> y_;
    std::span<const double> w_;
    TreeFitOptions opt_;
    Rng* rng_;
    std::vector<TreeNode> nodes_;
    std::vector<std::size_t> order_;
    std::vector<int> feature_pool_;
};

}  // namespace

DecisionTreeModel fit_decision_tree(const Matrix& X, std::span<const int> y,
                                    const TreeFitOptions& opt,
                                    std::span<const double> weights, Rng* rng) {
    if (X.rows() == 0) throw std::invalid_argument("fit_decision_tree: empty training set");
    if (y.size() != X.rows())
        throw std::invalid_argument("fit_decision_tree: feature/label count mismatch");
    if (!weights.empty() && weights.size() != y.size())
        throw std::invalid_argument("fit_decision_tree: weight count mismatch");
    if (opt.min_samples_split < 2)
        throw std::invalid_argument("fit_decision_tree: min_samples_split must be >= 2");
    const int k = static_cast<int>(X.cols());
    if (opt.features_per_split < 0 || opt.features_per_split > k)
        throw std::invalid_argument("fit_decision_tree: features_per_split out of range");
    if (opt.features_per_split > 0 && opt.features_per_split < k && rng == nullptr)
        throw std::invalid_argument("fit_decision_tree: feature subsampling needs an rng");
    for (int v : y)
        if (v != 0 && v != 1)
            throw std::invalid_argument("fit_decision_tree: labels must be 0 or 1");

    DecisionTreeModel model;
    model.n_features = X.cols();
    model.nodes = TreeBuilder(X, y, weights, opt, rng).build();
    return model;
}

int predict(const DecisionTreeModel& model, std::span<const double> x) {
    if (x.size() != model.n_features)
        throw std::invalid_argument("predict: expected " + std::to_string(model.n_features) +
                                    " features");
    const TreeNode* node = &model.nodes[0];
    while (!node->is_leaf())
        node = &model.nodes[x[node->feature] <= node->threshold ? node->left : node->right];
    return node->label;
}

}  // namespace tumorml
