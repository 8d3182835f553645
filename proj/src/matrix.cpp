#include "crkit/matrix.hpp"

namespace crkit::exact {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw invalid_input("ragged matrix initializer");
        for (const auto& v : row) data_.push_back(v);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) throw invalid_input("unit matrix index out of range");
    ExactMatrix m(n, n);
    m(i, j) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Scalar>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw invalid_input("matrix addition: shape mismatch");
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k)
        m.data_[k] = a.data_[k] + b.data_[k];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw invalid_input("matrix subtraction: shape mismatch");
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k)
        m.data_[k] = a.data_[k] - b.data_[k];
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw invalid_input("matrix product: shape mismatch");
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) m(i, j) += aik * bkj;
            }
        }
    return m;
}

ExactMatrix operator*(const Scalar& c, const ExactMatrix& a) {
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = c * a.data_[k];
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
    return m;
}

Scalar ExactMatrix::trace() const {
    if (!is_square()) throw invalid_input("trace of non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ExactMatrix ExactMatrix::from_flat(std::size_t rows, std::size_t cols,
                                   const std::vector<Scalar>& flat) {
    if (flat.size() != rows * cols)
        throw invalid_input("from_flat: wrong number of entries");
    ExactMatrix m(rows, cols);
    m.data_ = flat;
    return m;
}

ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw invalid_input("bracket requires equal square matrices");
    return x * y - y * x;
}

} // namespace crkit::exact
