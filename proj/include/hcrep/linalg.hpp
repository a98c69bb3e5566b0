#pragma once

#include <optional>
#include <vector>

#include "hcrep/rational.hpp"

namespace hcrep {

/// Dense row-major matrix over Q. Small sizes only (rank of a root system,
/// dimension of a Lie algebra).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_int(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    RationalMatrix operator*(const RationalMatrix& other) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    bool operator==(const RationalMatrix& other) const = default;

    RationalMatrix transpose() const;

    /// nullopt when singular.
    std::optional<RationalMatrix> inverse() const;
    std::size_t rank() const;
    Rational determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Solves M x = b for square nonsingular M; nullopt when singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b);

}  // namespace hcrep
