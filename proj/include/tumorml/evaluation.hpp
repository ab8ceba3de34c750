#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tumorml/classifier.hpp"
#include "tumorml/dataset.hpp"
#include "tumorml/pca.hpp"

namespace tumorml {

struct SplitSpec {
    double train_fraction = 0.8;
    std::uint64_t seed = 0;
};

/// Seeded shuffle permutation used by train_test_split; exposed so paired
/// splits can be asserted.
std::vector<std::size_t> split_permutation(std::size_t n, std::uint64_t seed);

/// Unstratified shuffle split: first floor(train_fraction * n) shuffled rows
/// train, the rest test. Both sides must end up non-empty.
std::pair<Dataset, Dataset> train_test_split(const Dataset& ds, const SplitSpec& spec);

/// 100 * #correct / n.
double accuracy(std::span<const int> preds, std::span<const int> truth);

/// 100 * #correct among truth==cls / #truth==cls. Errors when the class is
/// absent from truth.
double class_recall(std::span<const int> preds, std::span<const int> truth, int cls);

struct RunRecord {
    int run = 0;
    std::uint64_t seed = 0;
    double accuracy_pct = 0.0;
    std::optional<double> recall_sick;      // absent when the test split lacks the class
    std::optional<double> recall_not_sick;
    std::optional<bool> external_is_tumor;  // absent without an external image
    std::size_t n_test_sick = 0;
    std::size_t n_test_not_sick = 0;
};

/// Averaged metrics over repeated runs, Table-style.
struct EvalReport {
    std::string algorithm;
    double model_accuracy_pct = 0.0;
    std::optional<double> pct_sick;
    std::optional<double> pct_not_sick;
    std::optional<double> pct_test;
    int runs = 0;
    std::vector<RunRecord> records;
};

struct EvalOptions {
    std::size_t k_pca = 60;
    int runs = 10;
    double train_fraction = 0.8;
    std::uint64_t base_seed = 42;
    /// Already resized/flattened/normalized external test image, length d.
    std::optional<std::vector<double>> external_features;
};

/// One run's reduced realization: split with seed base_seed + run, PCA fit on
/// the train rows only, both sides (and the external image) projected with
/// that model.
struct PreparedRun {
    int run = 0;
    std::uint64_t seed = 0;
    Matrix train_x;
    std::vector<int> train_y;
    Matrix test_x;
    std::vector<int> test_y;
    std::optional<std::vector<double>> external_reduced;
};

std::vector<PreparedRun> prepare_runs(const Dataset& ds, const EvalOptions& opt);

RunRecord evaluate_run(const PreparedRun& run, const ClassifierConfig& config);

EvalReport summarize_runs(const std::string& algorithm, std::vector<RunRecord> records);

/// The paper protocol: per run split -> fit PCA on train -> project -> train
/// classifier -> score; averages over runs. pct_test is the share of runs
/// classifying the external image as tumor.
EvalReport repeated_evaluate(const Dataset& ds, const ClassifierConfig& config,
                             const EvalOptions& opt);

/// Aligned human-readable table (one algorithm row).
std::string report_table(const EvalReport& report);

/// CSV: algorithm,model_accuracy_pct,pct_sick,pct_not_sick,pct_test,runs.
std::string report_csv(const EvalReport& report);

}  // namespace tumorml
