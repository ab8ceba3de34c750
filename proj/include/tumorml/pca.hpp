#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "tumorml/matrix.hpp"

namespace tumorml {

/// Principal components of the training features in descending eigenvalue
/// order. Component rows are orthonormal; each one's largest-magnitude entry
/// is positive so serialized models are reproducible.
struct PcaModel {
    std::vector<double> mean;                // length d
    Matrix components;                       // k x d
    std::vector<double> explained_variance;  // length k, non-increasing

    std::size_t dim() const { return mean.size(); }
    std::size_t n_components() const { return components.rows(); }
};

/// Snapshot PCA: eigendecomposition of the n x n Gram matrix of centered rows.
/// Exact for the top n-1 components and the only tractable route when d >> n.
/// Requires n >= 2 and 1 <= k <= min(n-1, d).
PcaModel pca_fit(const Matrix& train, std::size_t k);

/// Projection: out_i = <x - mean, component_i>.
std::vector<double> pca_transform(const PcaModel& model, std::span<const double> x);
Matrix pca_transform(const PcaModel& model, const Matrix& x);

/// Text persistence, 9 significant digits: one "mean" line of d fields, k
/// component lines of d fields, one line of k explained variances.
void save_pca(const PcaModel& model, const std::filesystem::path& path);
PcaModel load_pca(const std::filesystem::path& path);

}  // namespace tumorml
