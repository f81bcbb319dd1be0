// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file enumerate.hpp
 * @brief Exact enumeration of integer points in an ellipsoid
 *        { x : x^T Q x + 2 b.x <= bound } for positive definite integer Q.
 *
 * Fincke-Pohst style depth-first search. Since q(x) is an integer for integer
 * x, the bound is floored and all interval endpoints come from exact 128-bit
 * integer arithmetic on leading-minor adjugates.
 */

#pragma once

#include "mukai/linalg.hpp"

#include <cmath>
#include <functional>

namespace mukai {

namespace detail {

using Wide = __int128;

inline Wide isqrt_wide(Wide v) {
    if (v < 0) throw PreconditionError("isqrt of a negative value");
    Wide r = static_cast<Wide>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline Wide floor_div_wide(Wide a, Wide b) {
    Wide q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Fraction-free walker. With x_{>j} fixed, let g be the linear term and kappa
// the constant term of q restricted to x_0..x_j, Q_j the leading block and
// N_j = det Q_j. The real minimum of q over x_{<=j} is kappa - g^T Q_j^{-1} g
// and x_j must satisfy (x_j N_j - M)^2 <= S N_{j-1} with M = -(adj(Q_j) g)_j
// and S = N_j (bound - minimum). All of these are integers.
class EllipsoidWalker {
public:
    EllipsoidWalker(const IntMatrix& q, const IntVec& b, const Rational& bound)
        : n_(q.rows()), q_(q), b_(b) {
        if (!q.is_square() || b.size() != n_) throw DimensionMismatch("enumerate: Q/b size mismatch");
        if (!q.is_symmetric()) throw PreconditionError("enumerate: Q is not symmetric");
        RatMatrix qr = to_rational(q);
        ldl(qr);  // throws unless positive definite
        bound_ = static_cast<Wide>(to_int(floor_rat(bound)));
        det_.assign(n_ + 1, 1);
        adj_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            std::vector<std::size_t> idx(j + 1);
            std::iota(idx.begin(), idx.end(), 0);
            RatMatrix block = qr.submatrix(idx);
            LdlFactor f = ldl(block);
            Rational det = 1;
            for (const Rational& d : f.diag) det *= d;
            det_[j + 1] = to_int(det);
            RatMatrix inv = inverse(block);
            adj_[j] = IntMatrix(j + 1, j + 1);
            for (std::size_t r = 0; r <= j; ++r)
                for (std::size_t c = 0; c <= j; ++c) adj_[j](r, c) = to_int(inv(r, c) * det);
        }
    }

    void run(const std::function<void(const IntVec&)>& visit) {
        if (n_ == 0) {
            if (bound_ >= 0) visit(IntVec{});
            return;
        }
        x_.assign(n_, 0);
        std::vector<Wide> g(b_.begin(), b_.end());
        descend(n_ - 1, g, 0, visit);
    }

    std::size_t nodes() const { return nodes_; }

private:
    void descend(std::size_t j, const std::vector<Wide>& g, Wide kappa,
                 const std::function<void(const IntVec&)>& visit) {
        ++nodes_;
        const IntMatrix& adj = adj_[j];
        Wide gag = 0, m = 0;
        for (std::size_t r = 0; r <= j; ++r) {
            Wide h = 0;
            for (std::size_t c = 0; c <= j; ++c) h += static_cast<Wide>(adj(r, c)) * g[c];
            gag += g[r] * h;
            if (r == j) m = -h;
        }
        const Wide nj = det_[j + 1];
        const Wide s = bound_ * nj - (kappa * nj - gag);
        if (s < 0) return;
        const Wide rad = isqrt_wide(s * det_[j]);
        const Int lo = static_cast<Int>(-floor_div_wide(-(m - rad), nj));
        const Int hi = static_cast<Int>(floor_div_wide(m + rad, nj));
        std::vector<Wide> next(j);
        for (Int x = lo; x <= hi; ++x) {
            x_[j] = x;
            if (j == 0) {
                visit(x_);
                continue;
            }
            for (std::size_t i = 0; i < j; ++i) next[i] = g[i] + static_cast<Wide>(q_(i, j)) * x;
            Wide k2 = kappa + static_cast<Wide>(q_(j, j)) * x * x + 2 * g[j] * x;
            descend(j - 1, next, k2, visit);
        }
    }

    std::size_t n_;
    IntMatrix q_;
    IntVec b_;
    Wide bound_ = 0;
    std::vector<Wide> det_;  // det_[j] = N_{j-1}, det_[0] = 1
    std::vector<IntMatrix> adj_;
    IntVec x_;
    std::size_t nodes_ = 0;
};

}  // namespace detail

/// Calls visit(x) for every integer x with x^T Q x + 2 b.x <= bound.
/// Q must be symmetric positive definite. Visiting order is deterministic.
inline std::size_t for_each_in_ellipsoid(const IntMatrix& q, const IntVec& b, const Rational& bound,
                                         const std::function<void(const IntVec&)>& visit) {
    detail::EllipsoidWalker w(q, b, bound);
    w.run(visit);
    return w.nodes();
}

/// Sorted list of all integer x with x^T Q x + 2 b.x <= bound.
inline std::vector<IntVec> enumerate_quadratic(const IntMatrix& q, const IntVec& b, const Rational& bound) {
    std::vector<IntVec> out;
    for_each_in_ellipsoid(q, b, bound, [&](const IntVec& x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<IntVec> enumerate_quadratic(const IntMatrix& q, const IntVec& b, Int bound) {
    return enumerate_quadratic(q, b, Rational(bound));
}

}  // namespace mukai
