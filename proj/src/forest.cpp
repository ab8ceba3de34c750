#include "tumorml/forest.hpp"

#include <cmath>
#include <stdexcept>

namespace tumorml {

RandomForestModel fit_random_forest(const Matrix& X, std::span<const int> y,
                                    const ForestParams& params, std::uint64_t seed) {
    if (X.rows() == 0) throw std::invalid_argument("fit_random_forest: empty training set");
    if (y.size() != X.rows())
        throw std::invalid_argument("fit_random_forest: feature/label count mismatch");
    if (params.n_trees < 1)
        throw std::invalid_argument("fit_random_forest: n_trees must be >= 1");

    const std::size_t n = X.rows();
    const int k = static_cast<int>(X.cols());

    RandomForestModel model;
    model.params = params;
    if (model.params.features_per_split <= 0)
        model.params.features_per_split =
            std::clamp(static_cast<int>(std::lround(std::sqrt(static_cast<double>(k)))), 1, k);

    TreeFitOptions tree_opt;
    tree_opt.max_depth = model.params.max_depth;
    tree_opt.min_samples_split = model.params.min_samples_split;
    tree_opt.features_per_split = model.params.features_per_split;

    model.trees.reserve(params.n_trees);
    model.tree_seeds.reserve(params.n_trees);

    Matrix sample(n, k);
    std::vector<int> sample_y(n);
    for (int t = 0; t < params.n_trees; ++t) {
        const std::uint64_t tree_seed = mix_seed(seed, static_cast<std::uint64_t>(t));
        Rng rng(tree_seed);

        if (model.params.bootstrap) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t src = rng.uniform_index(n);
                auto dst = sample.row(i);
                auto row = X.row(src);
                std::copy(row.begin(), row.end(), dst.begin());
                sample_y[i] = y[src];
            }
            model.trees.push_back(fit_decision_tree(sample, sample_y, tree_opt, {}, &rng));
        } else {
            model.trees.push_back(fit_decision_tree(X, y, tree_opt, {}, &rng));
        }
        model.tree_seeds.push_back(tree_seed);
    }
    return model;
}

int predict(const RandomForestModel& model, std::span<const double> x) {
    int ones = 0;
    for (const auto& tree : model.trees) ones += predict(tree, x);
    const int zeros = static_cast<int>(model.trees.size()) - ones;
    return ones > zeros ? 1 : 0;  // tie predicts 0
}

}  // namespace tumorml
