#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "tumorml/matrix.hpp"

namespace tumorml {

/// Feature rows in [0,1] plus one binary label per row (1 = tumor).
struct Dataset {
    Matrix features;          // n x d
    std::vector<int> labels;  // n entries in {0,1}

    std::size_t size() const { return labels.size(); }
    std::size_t dim() const { return features.cols(); }
};

/// Pixel intensities 0-255 mapped to [0,1] by dividing by 255.
std::vector<double> normalize(std::span<const int> raw);

/// Inverse of normalize (values scaled by 255 and rounded).
std::vector<int> denormalize(std::span<const double> values);

/// One normalized feature row from an image file:
/// load -> resize to side x side -> flatten -> normalize.
std::vector<double> preprocess_image(const std::filesystem::path& path, int side);

/// Ingests every file of both directories in lexicographic filename order
/// (tumor directory first). Tumor images get label 1, healthy label 0;
/// d = side * side.
Dataset build_dataset(const std::filesystem::path& tumor_dir,
                      const std::filesystem::path& healthy_dir, int side = 300);

/// Text format: one line per row, d features at 6 decimal places then the
/// integer label, comma-separated, no header.
void save_dataset(const Dataset& ds, const std::filesystem::path& path);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace tumorml
