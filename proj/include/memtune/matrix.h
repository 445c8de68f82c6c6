#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace memtune {

/// Dense row-major matrix of doubles. Small and value-semantic; used for
/// weight snapshots, transition counts and score grids.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return data_[index(r, c)]; }
    double operator()(int r, int c) const { return data_[index(r, c)]; }

    std::span<const double> values() const { return data_; }
    std::span<double> values() { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

} // namespace memtune
