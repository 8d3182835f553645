#pragma once

#include "crkit/errors.hpp"
#include "crkit/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace crkit::exact {

/// Dense matrix over Q(i), row-major. All arithmetic is exact.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Row-by-row construction, mostly for tests and small fixtures.
    ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) {
        return {rows, cols};
    }
    /// E_{ij}: single 1 at (i, j).
    static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static ExactMatrix diagonal(const std::vector<Scalar>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;

    ExactMatrix operator-() const;
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Scalar& c, const ExactMatrix& a);
    ExactMatrix& operator+=(const ExactMatrix& o) { return *this = *this + o; }
    ExactMatrix& operator-=(const ExactMatrix& o) { return *this = *this - o; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
        return !(a == b);
    }

    ExactMatrix transpose() const;
    /// Conjugate transpose A^dagger.
    ExactMatrix adjoint() const;
    ExactMatrix conj() const;
    Scalar trace() const;

    /// Flattens row-major into a 1 x (rows*cols) coordinate vector.
    std::vector<Scalar> flatten() const { return data_; }
    /// Inverse of flatten().
    static ExactMatrix from_flat(std::size_t rows, std::size_t cols,
                                 const std::vector<Scalar>& flat);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// XY - YX. Throws invalid_input unless both are square of equal size.
ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y);

} // namespace crkit::exact
