// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file moduli.hpp
 * @brief Numerical invariants of moduli of stable objects: existence and
 *        dimension, Betti numbers of K3 moduli, coherent-system dimensions and
 *        the scalar bookkeeping behind [e_i, f_i] = h_i.
 */

#pragma once

#include "mukai/vectors.hpp"

#include <mutex>

namespace mukai {

/// Integer polynomial in z, coefficients by ascending degree.
using Polynomial = IntVec;

inline Int evaluate_at_one(const Polynomial& p) {
    Int s = 0;
    for (Int c : p) s = checked_add(s, c);
    return s;
}

inline bool is_palindromic(const Polynomial& p) { return std::equal(p.begin(), p.end(), p.rbegin()); }

// ---------------------------------------------------------------------------
// existence and dimension on K3-type surfaces

inline Int k3_self_pairing(const MukaiVector& v, const SurfaceModel& X) {
    if (v.s2 % 2 != 0) throw PreconditionError("odd s2: the H^4 component is not integral");
    return mukai_pairing_int(v, v, X);
}

/// M_H(v) is nonempty iff <v^2> >= -2 (under the minimality condition).
inline bool exists_k3(const MukaiVector& v, const SurfaceModel& X) { return k3_self_pairing(v, X) >= -2; }

/// <v^2> + 1 + pg, or nullopt when the moduli space is empty.
inline std::optional<Int> k3_dimension(const MukaiVector& v, const SurfaceModel& X) {
    Int s = k3_self_pairing(v, X);
    if (s < -2) return std::nullopt;
    return s + 1 + X.pg;
}

/// Coefficients of q^k z^j in prod_m (1-z^{2m-2}q^m)^-1 (1-z^{2m}q^m)^-22 (1-z^{2m+2}q^m)^-1
/// for k <= n. Row k has 4k + 1 entries.
class GottscheTable {
public:
    static const GottscheTable& instance() {
        static GottscheTable table;
        return table;
    }

    /// Largest length whose Betti numbers all fit in Int.
    static constexpr Int kMaxLength = 31;

    Polynomial coefficient(Int n) const {
        if (n < 0) throw PreconditionError("negative Hilbert scheme length");
        if (n > kMaxLength)
            throw std::overflow_error("Betti numbers of Hilb^" + std::to_string(n) + " do not fit in 64 bits");
        std::lock_guard<std::mutex> lock(mu_);
        if (static_cast<std::size_t>(n) >= rows_.size()) extend(static_cast<std::size_t>(n));
        return rows_[static_cast<std::size_t>(n)];
    }

private:
    GottscheTable() = default;

    // Recomputes the truncated product up to q^n.
    void extend(std::size_t n) const {
        const std::size_t zmax = 4 * n;
        std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(zmax + 1, 0));
        s[0][0] = 1;
        auto divide = [&](std::size_t qm, std::size_t za, int times) {
            for (int t = 0; t < times; ++t)
                for (std::size_t q = qm; q <= n; ++q)
                    for (std::size_t z = za; z <= zmax; ++z)
                        s[q][z] = checked_add(s[q][z], s[q - qm][z - za]);
        };
        for (std::size_t m = 1; m <= n; ++m) {
            divide(m, 2 * m - 2, 1);
            divide(m, 2 * m, 22);
            divide(m, 2 * m + 2, 1);
        }
        rows_.clear();
        for (std::size_t k = 0; k <= n; ++k) rows_.emplace_back(s[k].begin(), s[k].begin() + 4 * k + 1);
    }

    mutable std::mutex mu_;
    mutable std::vector<Polynomial> rows_;
};

/// Betti numbers (coefficient of z^k) of the moduli space M_H(v) on a K3
/// surface, which is deformation equivalent to Hilb^n with n = <v^2>/2 + 1.
inline Polynomial poincare_from_square(Int square) {
    if (square < -2) throw PreconditionError("<v^2> < -2: the moduli space is empty");
    if (square % 2 != 0) throw PreconditionError("<v^2> must be even on a K3 surface");
    return GottscheTable::instance().coefficient(square / 2 + 1);
}

inline Polynomial poincare_k3(const MukaiVector& v, const SurfaceModel& X) {
    return poincare_from_square(k3_self_pairing(v, X));
}

// ---------------------------------------------------------------------------
// coherent systems and the [e, f] scalar

/// <v - n v_i, v> - n^2 + 1 + pg from the pairings <v^2> and <v, v_i>.
inline Int coherent_system_dim(Int v_square, Int v_vi, Int n, Int pg) {
    return v_square - n * v_vi - n * n + 1 + pg;
}

inline Int coherent_system_dim(const MukaiVector& v, const MukaiVector& vi, Int n, const SurfaceModel& X) {
    if (mukai_pairing_int(vi, vi, X) != -2) throw PreconditionError("v_i is not a (-2)-vector");
    if (n <= 0) throw PreconditionError("n must be positive");
    return coherent_system_dim(mukai_pairing_int(v, v, X), mukai_pairing_int(v, vi, X), n, X.pg);
}

enum class ExcessSide { Hom, Ext };

/// Excess intersection constant (-1)^{dim P} (dim P + 1) of the projective
/// bundle P over M_H(w). Hom side: dim P = -<v_i,w> - 1, needs <v_i,w> <= 0.
/// Ext side: dim P = <v_i,w> - 1 with the opposite orientation, needs <v_i,w> >= 0.
inline Int excess_constant(Int vi_w, ExcessSide side) {
    auto parity = [](Int k) { return (k % 2 == 0) ? Int{1} : Int{-1}; };
    if (side == ExcessSide::Hom) {
        if (vi_w > 0) throw PreconditionError("hom side needs <v_i, w> <= 0");
        Int dim_p = -vi_w - 1;
        return parity(dim_p) * (dim_p + 1);
    }
    if (vi_w < 0) throw PreconditionError("ext side needs <v_i, w> >= 0");
    Int dim_p = vi_w - 1;
    return -parity(dim_p + 1) * (dim_p + 1);
}

/// Scalar by which [e_i, f_i] acts on H_*(M_H(w)), assembled from the excess
/// constants and the sign (-1)^{r(v)} of the e-operator, r(v) = -<v_i,v> - 1
/// for v = w + v_i. The composition is oriented so that the hom-side term
/// enters with a minus sign and the ext-side term with a plus sign.
inline Int ef_scalar_from_pairing(Int vi_w) {
    const Int r_v = -(vi_w - 2) - 1;
    const Int sign = (r_v % 2 == 0) ? 1 : -1;
    if (vi_w < 0) return -sign * excess_constant(vi_w, ExcessSide::Hom);
    if (vi_w > 0) return sign * excess_constant(vi_w, ExcessSide::Ext);
    return 0;
}

inline Int ef_diagonal_scalar(const MukaiVector& vi, const MukaiVector& w, const SurfaceModel& X) {
    if (mukai_pairing_int(vi, vi, X) != -2) throw PreconditionError("v_i is not a (-2)-vector");
    return ef_scalar_from_pairing(mukai_pairing_int(vi, w, X));
}

/// Smallest n0 >= 0 with <(v + s n v_i)^2> < -(1 + pg) for every n >= n0,
/// where s = +1 or -1. The square is <v^2> + 2 s n <v,v_i> - 2 n^2.
inline Int nilpotency_threshold(Int v_square, Int v_vi, Int pg, Int s) {
    if (s != 1 && s != -1) throw PreconditionError("direction must be +1 or -1");
    auto below = [&](Int n) { return v_square + 2 * s * n * v_vi - 2 * n * n < -(1 + pg); };
    Int n = std::max<Int>(0, s * v_vi / 2 + 1);  // past the vertex s<v,v_i>/2
    while (!below(n)) ++n;
    while (n > 0 && below(n - 1)) --n;
    return n;
}

// ---------------------------------------------------------------------------
// surfaces with K != 0

/// 1 + pg - chi(gamma, gamma).
inline Int expected_dim(const GammaVector& gamma, const SurfaceModel& X) {
    return 1 + X.pg - chi_pair_gamma(gamma, gamma, X);
}

// ---------------------------------------------------------------------------
// descriptors

struct ModuliDescriptor {
    std::string surface;
    MukaiVector vector;
    Int self_intersection = 0;
    bool exists = false;
    std::optional<Int> dimension;
    std::optional<Polynomial> poincare;
    std::optional<bool> minimality;
    std::vector<std::string> flags;
};

inline ModuliDescriptor describe_k3(const MukaiVector& v, const SurfaceModel& X,
                                    const std::optional<TwistData>& G = std::nullopt,
                                    const std::optional<IntVec>& H = std::nullopt) {
    ModuliDescriptor d;
    d.surface = X.name;
    d.vector = v;
    d.self_intersection = k3_self_pairing(v, X);
    d.exists = d.self_intersection >= -2;
    d.dimension = k3_dimension(v, X);
    if (d.exists) {
        try {
            d.poincare = poincare_k3(v, X);
        } catch (const std::overflow_error&) {
            d.flags.push_back("poincare-overflow");
        }
        if (d.self_intersection == -2) d.flags.push_back("rigid");
    }
    if (G && H) {
        try {
            d.minimality = minimality_holds(v, *G, *H, MinimalityMode::Degree, X);
        } catch (const PreconditionError&) {
            d.flags.push_back("minimality-undefined");
        }
        if (d.minimality && !*d.minimality) d.flags.push_back("minimality-fails");
    } else {
        d.flags.push_back("minimality-assumed");
    }
    return d;
}

}  // namespace mukai
