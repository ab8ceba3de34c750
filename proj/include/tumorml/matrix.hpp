#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tumorml {

/// Dense row-major matrix of doubles. One sample per row throughout the
/// library, hence the span-based row accessors.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }

    /// Appends a row; fixes the column count on the first append.
    void push_row(std::span<const double> values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        assert(values.size() == cols_);
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    /// Adopts a flat row-major buffer of size rows * cols.
    static Matrix from_flat(std::size_t rows, std::size_t cols, std::vector<double> flat) {
        assert(flat.size() == rows * cols);
        Matrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.data_ = std::move(flat);
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace tumorml
