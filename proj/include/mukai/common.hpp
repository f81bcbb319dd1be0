// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file common.hpp
 * @brief Scalar types, error hierarchy, checked integer arithmetic and a
 *        small dense matrix used throughout mukai-kit.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

// ---------------------------------------------------------------------------
// errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Raised when a config file or model name cannot be understood. Carries the
/// offending line (0 when not line-based) and field name.
class ConfigError : public Error {
public:
    ConfigError(std::size_t line, std::string field, const std::string& what)
        : Error(format(line, field, what)), line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(std::size_t line, const std::string& field,
                              const std::string& what) {
        std::ostringstream os;
        if (line > 0) os << "line " << line << ": ";
        if (!field.empty()) os << "field '" << field << "': ";
        os << what;
        return os.str();
    }

    std::size_t line_;
    std::string field_;
};

// ---------------------------------------------------------------------------
// checked arithmetic

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// Floor division for signed integers (rounds toward -infinity).
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

inline Rational rat(Int v) { return Rational(v); }

inline Int to_int(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<Int>::max()) || v < BigInt(std::numeric_limits<Int>::min()))
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<Int>(v);
}

/// Exact integer value of a rational; throws if it is not integral.
inline Int to_int(const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw PreconditionError("rational value is not an integer");
    return to_int(BigInt(boost::multiprecision::numerator(q)));
}

inline BigInt floor_rat(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);  // always positive
    BigInt f = n / d;
    if (n % d != 0 && n < 0) f -= 1;
    return f;
}

inline BigInt ceil_rat(const Rational& q) { return -floor_rat(-q); }

// ---------------------------------------------------------------------------
// dense row-major matrix

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool is_square() const noexcept { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Principal submatrix on the given index list.
    Matrix submatrix(const std::vector<std::size_t>& idx) const {
        Matrix s(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = (*this)(idx[a], idx[b]);
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matrix/vector size mismatch");
    IntVec out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] = checked_add(out[i], checked_mul(m(i, j), v[j]));
    return out;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

/// x^T G y for a symmetric Gram matrix G.
inline Int bilinear(const IntMatrix& g, const IntVec& x, const IntVec& y) {
    if (g.rows() != x.size() || g.cols() != y.size())
        throw DimensionMismatch("vector does not live in the lattice");
    return dot(x, mat_vec(g, y));
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector size mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector size mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline IntVec scale(Int k, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
    return r;
}

/// a + k*b
inline IntVec axpy(const IntVec& a, Int k, const IntVec& b) { return add(a, scale(k, b)); }

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace mukai
