#pragma once

#include <string>
#include <vector>

#include "tumorml/evaluation.hpp"

namespace tumorml {

struct GridResult {
    std::size_t cell = 0;  // enumeration index
    KernelSpec spec;
    EvalReport report;
};

struct GridFailure {
    std::size_t cell = 0;
    KernelSpec spec;
    std::string error;
};

struct GridOutcome {
    std::vector<GridResult> ranked;  // accuracy desc, pct_test desc, cell asc
    std::vector<GridFailure> failures;

    const GridResult& best() const { return ranked.front(); }
};

/// The full SVM parameter cross-product, 160 cells: kernels (linear, sigmoid,
/// rbf, polynomial) x C (0.1, 1, 2, 3, 4) x gamma (auto, scale) x degree
/// (2, 3, 4, 5), rightmost fastest.
std::vector<KernelSpec> enumerate_grid();

/// Evaluates every cell with identical seeds (paired splits), ranks by mean
/// accuracy then pct_test then enumeration order. Failed cells are recorded
/// and skipped; the search keeps going.
GridOutcome grid_search(const Dataset& ds, const EvalOptions& opt);

/// Ranking key applied in place (exposed for tests).
void rank_results(std::vector<GridResult>& results);

/// CSV with one row per enumerated cell (including failures):
/// kernel,C,gamma_mode,degree,model_accuracy_pct,pct_sick,pct_not_sick,pct_test,status.
std::string grid_csv(const GridOutcome& outcome);

/// One-row table of the winning cell: Kernel, C, Gamma, Degree, Accuracy, P. Test.
std::string best_summary(const GridResult& best);

}  // namespace tumorml
