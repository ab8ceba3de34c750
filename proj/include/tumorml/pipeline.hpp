#pragma once

#include <filesystem>

#include "tumorml/classifier.hpp"
#include "tumorml/dataset.hpp"
#include "tumorml/pca.hpp"

namespace tumorml {

/// Everything needed to classify a single image file: the image side length,
/// the fitted projection and the trained classifier.
struct PipelineModel {
    int side = 300;
    PcaModel pca;
    TrainedClassifier classifier;
};

/// Fits PCA and the classifier on the whole dataset (no split); used by the
/// predict command's retrain path.
PipelineModel train_pipeline(const Dataset& ds, const ClassifierConfig& config,
                             std::size_t k_pca, std::uint64_t seed);

/// load -> resize -> flatten -> normalize -> project -> predict.
int predict_image(const PipelineModel& model, const std::filesystem::path& image);

void save_pipeline(const PipelineModel& model, const std::filesystem::path& path);
PipelineModel load_pipeline(const std::filesystem::path& path);

}  // namespace tumorml
