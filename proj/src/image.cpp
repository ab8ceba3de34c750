#include "tumorml/image.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tumorml/error.hpp"

namespace tumorml {

std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return static_cast<std::uint8_t>(std::lround(0.299 * r + 0.587 * g + 0.114 * b));
}

GrayImage load_image(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec)
        throw IoError("cannot read image: " + path.string());
    if (!std::filesystem::is_regular_file(path, ec) || ec)
        throw IoError("not a regular file: " + path.string());

    // IMREAD_COLOR yields 8-bit BGR for every source depth and channel
    // layout; gray sources come back replicated, so luminance() returns the
    // original value exactly (the weights sum to 1).
    cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
    if (bgr.empty())
        throw FormatError("not a decodable image: " + path.string());

    GrayImage img;
    img.width = bgr.cols;
    img.height = bgr.rows;
    img.pixels.resize(static_cast<std::size_t>(bgr.cols) * bgr.rows);
    for (int r = 0; r < bgr.rows; ++r) {
        const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(r);
        for (int c = 0; c < bgr.cols; ++c)
            img.at(r, c) = luminance(row[c][2], row[c][1], row[c][0]);
    }
    return img;
}

void save_image(const GrayImage& img, const std::filesystem::path& path) {
    if (img.width <= 0 || img.height <= 0)
        throw std::invalid_argument("save_image: empty image");
    cv::Mat mat(img.height, img.width, CV_8UC1,
                const_cast<std::uint8_t*>(img.pixels.data()));
    bool ok = false;
    try {
        ok = cv::imwrite(path.string(), mat);
    } catch (const cv::Exception& e) {
        throw IoError("cannot write image " + path.string() + ": " + e.err);
    }
    if (!ok) throw IoError("cannot write image: " + path.string());
}

GrayImage resize_image(const GrayImage& img, int target_w, int target_h) {
    if (target_w < 1 || target_h < 1)
        throw std::invalid_argument("resize_image: target dimensions must be >= 1");
    if (img.width < 1 || img.height < 1)
        throw std::invalid_argument("resize_image: empty source image");
    if (target_w == img.width && target_h == img.height) return img;

    GrayImage out;
    out.width = target_w;
    out.height = target_h;
    out.pixels.resize(static_cast<std::size_t>(target_w) * target_h);

    // Pixel-center alignment: output center (c+0.5, r+0.5) maps to source
    // coordinates scaled by the size ratio.
    const double scale_x = static_cast<double>(img.width) / target_w;
    const double scale_y = static_cast<double>(img.height) / target_h;

    for (int r = 0; r < target_h; ++r) {
        double fy = (r + 0.5) * scale_y - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double wy = fy - y0;
        for (int c = 0; c < target_w; ++c) {
            double fx = (c + 0.5) * scale_x - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double wx = fx - x0;

            const double top = img.at(y0, x0) * (1.0 - wx) + img.at(y0, x1) * wx;
            const double bot = img.at(y1, x0) * (1.0 - wx) + img.at(y1, x1) * wx;
            const long v = std::lround(top * (1.0 - wy) + bot * wy);
            out.at(r, c) = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
        }
    }
    return out;
}

std::vector<int> flatten(const GrayImage& img) {
    return {img.pixels.begin(), img.pixels.end()};
}

GrayImage unflatten(std::span<const int> raw, int width, int height) {
    if (width < 1 || height < 1 ||
        raw.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("unflatten: size mismatch");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.reserve(raw.size());
    for (int v : raw) {
        if (v < 0 || v > 255)
            throw std::invalid_argument("unflatten: intensity outside [0,255]");
        img.pixels.push_back(static_cast<std::uint8_t>(v));
    }
    return img;
}

}  // namespace tumorml
