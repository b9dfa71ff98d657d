#include "cdesc/exact.hpp"

namespace cdesc {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    v_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw error(errc::dimension_mismatch, "ragged matrix initializer");
        for (const auto& x : row) v_.push_back(x);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::mul(const Mat& rhs) const {
    if (cols_ != rhs.rows_)
        throw error(errc::dimension_mismatch, "matrix product shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_integer() const {
    for (const auto& x : v_)
        if (rat_den(x) != 1) return false;
    return true;
}

namespace {

// Fraction-free Bareiss elimination; exact over the integers and avoids
// the coefficient blow-up of naive fraction arithmetic on minors.
Rat determinant_bareiss(const Mat& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rat_num(m.at(i, j));

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = t / prev; // division is exact in Bareiss
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1]);
    return sign < 0 ? -det : det;
}

Rat determinant_gauss(Mat m) {
    const std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            Rat f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Rat inv = m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Rat determinant(const Mat& m) {
    if (m.rows() != m.cols())
        throw error(errc::dimension_mismatch, "determinant of non-square matrix");
    if (m.rows() == 0) return Rat(1);
    if (m.is_integer()) return determinant_bareiss(m);
    return determinant_gauss(m);
}

Mat kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t col = 0; col < m.cols(); ++col) {
            if (p < pivots.size() && pivots[p] == col)
                ++p;
            else
                free_cols.push_back(col);
        }
    }
    Mat basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(f, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(pivots[i], k) = -r.at(i, f);
    }
    return basis;
}

std::size_t rank(const Mat& m) {
    Mat r = m;
    return rref(r).size();
}

} // namespace cdesc
