#include "tumorml/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include "tumorml/error.hpp"
#include "tumorml/image.hpp"

namespace tumorml {

std::vector<double> normalize(std::span<const int> raw) {
    std::vector<double> out;
    out.reserve(raw.size());
    for (int v : raw) {
        if (v < 0 || v > 255)
            throw std::invalid_argument("normalize: value outside [0,255]");
        out.push_back(v / 255.0);
    }
    return out;
}

std::vector<int> denormalize(std::span<const double> values) {
    std::vector<int> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(static_cast<int>(std::lround(v * 255.0)));
    return out;
}

std::vector<double> preprocess_image(const std::filesystem::path& path, int side) {
    GrayImage img = resize_image(load_image(path), side, side);
    std::vector<int> raw = flatten(img);
    return normalize(raw);
}

namespace {

std::vector<std::filesystem::path> list_files_sorted(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec) || ec)
        throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    return files;
}

}  // namespace

Dataset build_dataset(const std::filesystem::path& tumor_dir,
                      const std::filesystem::path& healthy_dir, int side) {
    if (side < 1) throw std::invalid_argument("build_dataset: side must be >= 1");

    const auto tumor_files = list_files_sorted(tumor_dir);
    const auto healthy_files = list_files_sorted(healthy_dir);
    if (tumor_files.empty() && healthy_files.empty())
        throw std::runtime_error("empty dataset: no images in " + tumor_dir.string() +
                                 " or " + healthy_dir.string());

    Dataset ds;
    ds.features = Matrix(tumor_files.size() + healthy_files.size(),
                         static_cast<std::size_t>(side) * side);
    ds.labels.reserve(tumor_files.size() + healthy_files.size());

    std::size_t row = 0;
    auto ingest = [&](const std::vector<std::filesystem::path>& files, int label) {
        for (const auto& file : files) {
            std::vector<double> values = preprocess_image(file, side);
            std::copy(values.begin(), values.end(), ds.features.row(row).begin());
            ds.labels.push_back(label);
            ++row;
        }
    };
    ingest(tumor_files, 1);
    ingest(healthy_files, 0);
    return ds;
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());

    std::string line;
    char buf[32];
    for (std::size_t r = 0; r < ds.size(); ++r) {
        line.clear();
        const auto row = ds.features.row(r);
        for (double v : row) {
            std::snprintf(buf, sizeof(buf), "%.6f,", v);
            line += buf;
        }
        std::snprintf(buf, sizeof(buf), "%d\n", ds.labels[r]);
        line += buf;
        out << line;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());

    std::vector<double> flat;
    std::vector<int> labels;
    std::size_t n_fields = 0;  // fixed by the first line
    std::size_t line_no = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == EOF) break;  // trailing newline

        std::vector<double> fields;
        if (n_fields > 0) fields.reserve(n_fields);
        const char* p = line.c_str();
        const char* end = p + line.size();
        while (p <= end) {
            const char* comma = std::find(p, end, ',');
            char* after = nullptr;
            double v = std::strtod(p, &after);
            if (after == p || after != comma || !std::isfinite(v))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": non-numeric field '" + std::string(p, comma) + "'");
            fields.push_back(v);
            p = comma + 1;
            if (comma == end) break;
        }

        if (n_fields == 0) {
            n_fields = fields.size();
            if (n_fields < 2)
                throw ParseError("line 1: expected at least one feature and a label");
        } else if (fields.size() != n_fields) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n_fields) + " fields, got " +
                             std::to_string(fields.size()));
        }

        const double label = fields.back();
        if (label != 0.0 && label != 1.0)
            throw ParseError("line " + std::to_string(line_no) +
                             ": label must be 0 or 1");
        labels.push_back(static_cast<int>(label));
        flat.insert(flat.end(), fields.begin(), fields.end() - 1);
    }

    if (labels.empty()) throw ParseError("empty dataset file: " + path.string());

    Dataset ds;
    ds.features = Matrix::from_flat(labels.size(), n_fields - 1, std::move(flat));
    ds.labels = std::move(labels);
    return ds;
}

}  // namespace tumorml
