#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace tumorml {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // size = width * height

    std::uint8_t at(int row, int col) const { return pixels[row * width + col]; }
    std::uint8_t& at(int row, int col) { return pixels[row * width + col]; }
};

/// ITU-R 601 luma: round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Decodes a raster file (PNG, JPEG, PGM, ... anything OpenCV reads).
/// Color inputs collapse to gray via luminance().
GrayImage load_image(const std::filesystem::path& path);

/// Encodes by extension (.png, .jpg, .pgm, ...).
void save_image(const GrayImage& img, const std::filesystem::path& path);

/// Bilinear resampling with pixel-center alignment. Identity when the target
/// matches the source size.
GrayImage resize_image(const GrayImage& img, int target_w, int target_h);

/// Row-major scan: element r*width + c is pixel (row r, column c).
std::vector<int> flatten(const GrayImage& img);

/// Inverse of flatten.
GrayImage unflatten(std::span<const int> raw, int width, int height);

}  // namespace tumorml
