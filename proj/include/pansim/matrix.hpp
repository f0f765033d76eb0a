#pragma once

#include <cstddef>
#include <vector>

#include "pansim/common.hpp"

namespace pansim {

// Dense row-major matrix of doubles. Value semantics; just storage plus the
// handful of operations the policy and trainer need.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row(std::size_t r) { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    void add_scaled(const Matrix& other, double scale) {
        if (other.rows_ != rows_ || other.cols_ != cols_)
            throw ValidationError("Matrix::add_scaled: shape mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += scale * other.data_[i];
    }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v))
                return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace pansim
