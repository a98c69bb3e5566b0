#include "hcrep/linalg.hpp"

#include <cassert>
#include <utility>

namespace hcrep {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_int(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    assert(cols_ == other.rows_);
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

namespace {

// Reduces m in place to row echelon form, mirroring row operations on aug
// (if given). Returns the rank and the determinant sign/scale factor.
std::size_t echelon(RationalMatrix& m, RationalMatrix* aug, Rational* det) {
    std::size_t rank = 0;
    if (det) *det = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) {
            if (det) *det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
            if (aug)
                for (std::size_t j = 0; j < aug->cols(); ++j)
                    std::swap((*aug)(pivot, j), (*aug)(rank, j));
            if (det) *det = -*det;
        }
        Rational p = m(rank, col);
        if (det) *det *= p;
        for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) /= p;
        if (aug)
            for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(rank, j) /= p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
            if (aug)
                for (std::size_t j = 0; j < aug->cols(); ++j)
                    (*aug)(i, j) -= f * (*aug)(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    RationalMatrix m = *this;
    RationalMatrix inv = identity(rows_);
    if (echelon(m, &inv, nullptr) != rows_) return std::nullopt;
    return inv;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    return echelon(m, nullptr, nullptr);
}

Rational RationalMatrix::determinant() const {
    assert(rows_ == cols_);
    RationalMatrix m = *this;
    Rational det;
    if (echelon(m, nullptr, &det) != rows_) return 0;
    return det;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b) {
    RationalMatrix a = m;
    RationalMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    if (m.rows() != m.cols() || echelon(a, &rhs, nullptr) != m.rows()) return std::nullopt;
    std::vector<Rational> x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
    return x;
}

}  // namespace hcrep
