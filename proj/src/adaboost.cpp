#include "tumorml/adaboost.hpp"

#include <cmath>
#include <stdexcept>

namespace tumorml {

AdaBoostModel fit_adaboost(const Matrix& X, std::span<const int> y, int rounds) {
    if (X.rows() == 0) throw std::invalid_argument("fit_adaboost: empty training set");
    if (y.size() != X.rows())
        throw std::invalid_argument("fit_adaboost: feature/label count mismatch");
    if (rounds < 1) throw std::invalid_argument("fit_adaboost: rounds must be >= 1");

    const std::size_t n = X.rows();
    bool has0 = false, has1 = false;
    for (int v : y) (v == 1 ? has1 : has0) = true;
    if (!has0 || !has1)
        throw std::invalid_argument("fit_adaboost: both classes must be present");

    AdaBoostModel model;
    model.rounds = rounds;

    TreeFitOptions stump_opt;
    stump_opt.max_depth = 1;

    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    std::vector<int> preds(n);

    for (int t = 0; t < rounds; ++t) {
        DecisionTreeModel stump = fit_decision_tree(X, y, stump_opt, weights);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            preds[i] = predict(stump, X.row(i));
            if (preds[i] != y[i]) err += weights[i];
        }

        if (err <= 1e-10) {
            // Perfect stump; a capped weight stands in for the diverging ln.
            model.stumps.push_back(std::move(stump));
            model.alphas.push_back(10.0);
            model.stump_errors.push_back(err);
            break;
        }
        if (err >= 0.5) break;  // no better than chance: discard and stop

        const double alpha = 0.5 * std::log((1.0 - err) / err);
        model.stumps.push_back(std::move(stump));
        model.alphas.push_back(alpha);
        model.stump_errors.push_back(err);

        // w_i <- w_i * exp(-alpha y_i h_i) with y,h in {-1,+1}, then renormalize.
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] *= std::exp(preds[i] == y[i] ? -alpha : alpha);
            total += weights[i];
        }
        for (double& w : weights) w /= total;
    }
    return model;
}

int predict(const AdaBoostModel& model, std::span<const double> x) {
    double score = 0.0;
    for (std::size_t t = 0; t < model.stumps.size(); ++t)
        score += model.alphas[t] * (predict(model.stumps[t], x) == 1 ? 1.0 : -1.0);
    return score > 0.0 ? 1 : 0;  // zero sum predicts 0
}

}  // namespace tumorml
