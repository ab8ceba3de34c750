#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "tumorml/adaboost.hpp"
#include "tumorml/forest.hpp"
#include "tumorml/svm.hpp"
#include "tumorml/tree.hpp"

namespace tumorml {

enum class Algo { Tree, Forest, AdaBoost, Svm };

Algo algo_from_name(const std::string& name);  // tree | forest | adaboost | svm
std::string algo_name(Algo algo);

struct TreeParams {
    int max_depth = -1;
    int min_samples_split = 2;
};

struct AdaBoostParams {
    int rounds = 50;
};

/// Which classifier to train plus its hyperparameters. Only the block
/// matching `algo` is consulted.
struct ClassifierConfig {
    Algo algo = Algo::Tree;
    TreeParams tree;
    ForestParams forest;
    AdaBoostParams adaboost;
    KernelSpec svm;
};

using TrainedClassifier =
    std::variant<DecisionTreeModel, RandomForestModel, AdaBoostModel, SvmModel>;

/// Dispatches to the matching fit_* function. The seed only matters for the
/// forest; the other three are deterministic.
TrainedClassifier fit_classifier(const Matrix& X, std::span<const int> y,
                                 const ClassifierConfig& config, std::uint64_t seed);

int predict(const TrainedClassifier& model, std::span<const double> x);

/// Text round-trip; the header line names the variant. Loaded models predict
/// identically to the originals.
void save_classifier(const TrainedClassifier& model, std::ostream& out);
TrainedClassifier load_classifier(std::istream& in);

}  // namespace tumorml
