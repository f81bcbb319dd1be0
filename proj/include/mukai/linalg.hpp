// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over Z and Q: Smith normal form, integer kernel
 *        bases, rational row reduction and definiteness of symmetric forms.
 */

#pragma once

#include "mukai/common.hpp"

#include <cstdlib>
#include <optional>
#include <tuple>
#include <utility>

namespace mukai {

// ---------------------------------------------------------------------------
// Smith normal form

/// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... .
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;   // U
    IntMatrix right;  // V
    std::size_t rank = 0;
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
inline void row_axpy(IntMatrix& m, std::size_t dst, Int q, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) = checked_sub(m(dst, j), checked_mul(q, m(src, j)));
}

// col_dst -= q * col_src
inline void col_axpy(IntMatrix& m, std::size_t dst, Int q, std::size_t src) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) = checked_sub(m(i, dst), checked_mul(q, m(i, src)));
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
    using namespace detail;
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);
    std::size_t k = 0;
    for (; k < std::min(m, n); ++k) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::optional<std::pair<std::size_t, std::size_t>> piv;
            for (std::size_t i = k; i < m; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (d(i, j) != 0 &&
                        (!piv || std::llabs(d(i, j)) < std::llabs(d(piv->first, piv->second))))
                        piv = {i, j};
            if (!piv) {
                return SmithForm{std::move(d), std::move(u), std::move(v), k};
            }
            swap_rows(d, k, piv->first);
            swap_rows(u, k, piv->first);
            swap_cols(d, k, piv->second);
            swap_cols(v, k, piv->second);

            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                Int q = floor_div(d(i, k), d(k, k));
                row_axpy(d, i, q, k);
                row_axpy(u, i, q, k);
                if (d(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                Int q = floor_div(d(k, j), d(k, k));
                col_axpy(d, j, q, k);
                col_axpy(v, j, q, k);
                if (d(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the trailing block by the pivot
            std::optional<std::size_t> bad_row;
            for (std::size_t i = k + 1; i < m && !bad_row; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (d(i, j) % d(k, k) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            row_axpy(d, k, -1, *bad_row);
            row_axpy(u, k, -1, *bad_row);
        }
        if (d(k, k) < 0) {
            for (std::size_t j = 0; j < n; ++j) d(k, j) = -d(k, j);
            for (std::size_t j = 0; j < m; ++j) u(k, j) = -u(k, j);
        }
    }
    return SmithForm{std::move(d), std::move(u), std::move(v), k};
}

/// Integral basis of {x in Z^n : A x = 0}.
inline std::vector<IntVec> integer_kernel_basis(const IntMatrix& a) {
    if (a.rows() == 0) {
        std::vector<IntVec> basis;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            IntVec e(a.cols(), 0);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    SmithForm s = smith_normal_form(a);
    std::vector<IntVec> basis;
    for (std::size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.right.col(j));
    return basis;
}

/// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, checked_sub(old_r, checked_mul(q, r)));
        std::tie(old_s, s) = std::make_pair(s, checked_sub(old_s, checked_mul(q, s)));
        std::tie(old_t, t) = std::make_pair(t, checked_sub(old_t, checked_mul(q, t)));
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

// ---------------------------------------------------------------------------
// rational row reduction

struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline RowEchelon rref(RatMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// One solution of A x = b with all free variables set to zero, or nullopt.
inline std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve: rhs size mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RowEchelon e = rref(std::move(aug));
    for (std::size_t c : e.pivots)
        if (c == a.cols()) return std::nullopt;
    RatVec x(a.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

/// Basis of the rational null space of A.
inline std::vector<RatVec> rational_kernel(const RatMatrix& a) {
    RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec x(a.cols(), Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Scales a rational vector to the primitive integer vector on the same ray.
inline IntVec primitive_integer(const RatVec& v) {
    BigInt l = 1;
    for (const Rational& q : v) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(q)));
    std::vector<BigInt> w;
    BigInt g = 0;
    for (const Rational& q : v) {
        BigInt x = BigInt(boost::multiprecision::numerator(q)) * (l / BigInt(boost::multiprecision::denominator(q)));
        w.push_back(x);
        g = boost::multiprecision::gcd(g, x);
    }
    IntVec out;
    for (const BigInt& x : w) out.push_back(g == 0 ? 0 : to_int(BigInt(x / g)));
    return out;
}

// ---------------------------------------------------------------------------
// definiteness

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct DefinitenessResult {
    Definiteness kind;
    std::size_t kernel_dim = 0;  // meaningful for the semidefinite case
};

/// Inertia test by symmetric elimination on positive diagonal pivots.
/// Negative definite and indefinite forms both report Indefinite.
inline DefinitenessResult classify_symmetric(const RatMatrix& g) {
    if (!g.is_symmetric()) throw PreconditionError("form is not symmetric");
    RatMatrix m = g;
    std::vector<std::size_t> active(m.rows());
    std::iota(active.begin(), active.end(), 0);
    while (!active.empty()) {
        auto it = std::find_if(active.begin(), active.end(),
                               [&](std::size_t i) { return m(i, i) > 0; });
        if (it == active.end()) {
            for (std::size_t i : active)
                if (m(i, i) < 0) return {Definiteness::Indefinite, 0};
            for (std::size_t i : active)
                for (std::size_t j : active)
                    if (m(i, j) != 0) return {Definiteness::Indefinite, 0};
            return {Definiteness::PositiveSemidefinite, active.size()};
        }
        std::size_t p = *it;
        active.erase(it);
        for (std::size_t i : active)
            for (std::size_t j : active) m(i, j) -= m(i, p) * m(p, j) / m(p, p);
    }
    return {Definiteness::PositiveDefinite, 0};
}

/// Q = L diag(D) L^T for a positive definite rational Q (L unit lower triangular).
struct LdlFactor {
    RatMatrix lower;
    RatVec diag;
};

inline LdlFactor ldl(const RatMatrix& q) {
    const std::size_t n = q.rows();
    RatMatrix l = RatMatrix::identity(n);
    RatVec d(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational s = q(j, j);
        for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k) * d[k];
        if (s <= 0) throw PreconditionError("form is not positive definite");
        d[j] = s;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational t = q(i, j);
            for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k) * d[k];
            l(i, j) = t / s;
        }
    }
    return {std::move(l), std::move(d)};
}

inline RatMatrix inverse(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

}  // namespace mukai
