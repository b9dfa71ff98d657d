#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <initializer_list>
#include <vector>

#include "cdesc/errors.hpp"

namespace cdesc {

// All scalar arithmetic in the library is exact. Int is an arbitrary
// precision integer, Rat an always-canonical rational (denominator > 0,
// gcd(num, den) = 1; the backend maintains that invariant).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

// Dense row-major matrix of rationals. Values are immutable in spirit:
// the mutating accessors exist for construction only.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> init);

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& at(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }

    bool operator==(const Mat& o) const = default;

    Mat mul(const Mat& rhs) const;
    Mat transpose() const;
    bool is_zero() const;
    bool is_integer() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> v_;
};

// Exact determinant. Integer matrices go through fraction-free Bareiss
// elimination, everything else through plain rational Gauss elimination
// with first-nonzero pivoting.
Rat determinant(const Mat& m);

// Columns form a basis of the right kernel of m. Deterministic: reduced
// row echelon with first-nonzero pivots, one basis column per free
// column, free columns taken in ascending order.
Mat kernel_basis(const Mat& m);

std::size_t rank(const Mat& m);

} // namespace cdesc
