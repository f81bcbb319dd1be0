// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file vectors.hpp
 * @brief Mukai vectors, rank-0 classes and gamma vectors together with the
 *        Mukai pairing, twisted degree / Euler functionals and the gcd test
 *        for minimal positive values.
 */

#pragma once

#include "mukai/linalg.hpp"
#include "mukai/surface.hpp"

#include <array>
#include <optional>

namespace mukai {

/// v = r + c1 + a rho with the H^4 part stored doubled (s2 = 2a).
struct MukaiVector {
    Int r = 0;
    IntVec c1;
    Int s2 = 0;

    Int a() const {
        if (s2 % 2 != 0) throw PreconditionError("Mukai vector has half-integral H^4 part");
        return s2 / 2;
    }
    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// (c1, chi) of a sheaf with rank 0.
struct OneDimClass {
    IntVec c1;
    Int chi = 0;
    friend bool operator==(const OneDimClass&, const OneDimClass&) = default;
};

/// (rk, c1, chi).
struct GammaVector {
    Int r = 0;
    IntVec c1;
    Int chi = 0;
    friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// Twisting class G with rk G > 0.
struct TwistData {
    Int r = 1;
    IntVec c1;
    Int chi = 0;

    TwistData() = default;
    TwistData(Int rank, IntVec c, Int euler = 0) : r(rank), c1(std::move(c)), chi(euler) {
        if (r <= 0) throw PreconditionError("twist rank must be positive");
    }
    GammaVector gamma() const { return {r, c1, chi}; }
};

inline std::string to_string(const MukaiVector& v) {
    return "(" + std::to_string(v.r) + ", " + to_string(v.c1) + ", s2=" + std::to_string(v.s2) + ")";
}
inline std::string to_string(const GammaVector& v) {
    return "(" + std::to_string(v.r) + ", " + to_string(v.c1) + ", chi=" + std::to_string(v.chi) + ")";
}
inline std::string to_string(const OneDimClass& v) {
    return "(" + to_string(v.c1) + ", chi=" + std::to_string(v.chi) + ")";
}

// ---------------------------------------------------------------------------
// pairings

inline Rational mukai_pairing(const MukaiVector& x, const MukaiVector& y, const SurfaceModel& X) {
    if (!X.k_trivial) throw PreconditionError("Mukai pairing needs a numerically trivial canonical class");
    X.ns.check(x.c1);
    X.ns.check(y.c1);
    BigInt twice = BigInt(2) * X.ns.pair(x.c1, y.c1) - BigInt(x.r) * y.s2 - BigInt(x.s2) * y.r;
    return Rational(twice, BigInt(2));
}

/// Integral Mukai pairing; throws when the value is a half-integer.
inline Int mukai_pairing_int(const MukaiVector& x, const MukaiVector& y, const SurfaceModel& X) {
    return to_int(mukai_pairing(x, y, X));
}

inline Int rank0_pairing(const OneDimClass& x, const OneDimClass& y, const SurfaceModel& X) {
    X.ns.check(x.c1);
    X.ns.check(y.c1);
    return X.ns.pair(x.c1, y.c1);
}

/// chi(a, b) by Riemann-Roch, evaluated doubled so integrality can be checked.
inline Int chi_pair_gamma(const GammaVector& a, const GammaVector& b, const SurfaceModel& X) {
    X.ns.check(a.c1);
    X.ns.check(b.c1);
    const Int ka = X.ns.pair(a.c1, X.canonical);
    const Int kb = X.ns.pair(b.c1, X.canonical);
    // 2 ch2 = 2 chi - 2 r chi(O) + c1.K
    const Int ch2a2 = checked_add(checked_sub(checked_mul(2, a.chi), checked_mul(2 * a.r, X.chi_O)), ka);
    const Int ch2b2 = checked_add(checked_sub(checked_mul(2, b.chi), checked_mul(2 * b.r, X.chi_O)), kb);
    Int twice = checked_mul(a.r, ch2b2);
    twice = checked_add(twice, checked_mul(b.r, ch2a2));
    twice = checked_sub(twice, checked_mul(2, X.ns.pair(a.c1, b.c1)));
    twice = checked_sub(twice, checked_sub(checked_mul(a.r, kb), checked_mul(b.r, ka)));
    twice = checked_add(twice, checked_mul(2, checked_mul(checked_mul(a.r, b.r), X.chi_O)));
    if (twice % 2 != 0) throw PreconditionError("Euler pairing is not integral; invalid gamma vector");
    return twice / 2;
}

// ---------------------------------------------------------------------------
// conversions when K is numerically trivial: sqrt(td) = 1 + (chi(O)/2) rho,
// so 2a = 2 chi - r chi(O). On a K3 surface a = chi - r.

inline MukaiVector mukai_from_gamma(const GammaVector& g, const SurfaceModel& X) {
    if (!X.k_trivial) throw PreconditionError("Mukai vectors need a numerically trivial canonical class");
    return {g.r, g.c1, checked_sub(checked_mul(2, g.chi), checked_mul(g.r, X.chi_O))};
}

inline GammaVector gamma_from_mukai(const MukaiVector& v, const SurfaceModel& X) {
    if (!X.k_trivial) throw PreconditionError("Mukai vectors need a numerically trivial canonical class");
    Int twice = checked_add(v.s2, checked_mul(v.r, X.chi_O));
    if (twice % 2 != 0) throw PreconditionError("Mukai vector has no integral Euler characteristic");
    return {v.r, v.c1, twice / 2};
}

inline GammaVector gamma_of(const OneDimClass& e) { return {0, e.c1, e.chi}; }

// ---------------------------------------------------------------------------
// twisted functionals

inline Int deg_twisted(Int rank, const IntVec& c1, const TwistData& G, const IntVec& H, const SurfaceModel& X) {
    X.ns.check(c1);
    X.ns.check(G.c1);
    X.ns.check(H);
    return checked_sub(checked_mul(G.r, X.ns.pair(c1, H)), checked_mul(rank, X.ns.pair(G.c1, H)));
}
inline Int deg_twisted(const MukaiVector& E, const TwistData& G, const IntVec& H, const SurfaceModel& X) {
    return deg_twisted(E.r, E.c1, G, H, X);
}
inline Int deg_twisted(const GammaVector& E, const TwistData& G, const IntVec& H, const SurfaceModel& X) {
    return deg_twisted(E.r, E.c1, G, H, X);
}
inline Int deg_twisted(const OneDimClass& E, const TwistData& G, const IntVec& H, const SurfaceModel& X) {
    return deg_twisted(0, E.c1, G, H, X);
}

inline Int chi_twisted(const OneDimClass& E, const TwistData& G, const SurfaceModel& X) {
    X.ns.check(E.c1);
    X.ns.check(G.c1);
    return checked_sub(checked_mul(G.r, E.chi), X.ns.pair(G.c1, E.c1));
}
inline Int chi_twisted(const GammaVector& E, const TwistData& G, const SurfaceModel& X) {
    return chi_pair_gamma(G.gamma(), E, X);
}

// ---------------------------------------------------------------------------
// minimal positive values

/// Minimal positive value of an integral functional on Z^n, optionally on the
/// sublattice where a second functional vanishes, with a witness attaining it.
struct MinPositive {
    Int value = 0;
    IntVec witness;
    std::vector<IntVec> basis;  // integral basis of the constrained lattice
};

inline MinPositive min_positive_value(const IntVec& functional, const std::optional<IntVec>& constraint = {}) {
    const std::size_t n = functional.size();
    std::vector<IntVec> basis;
    if (constraint) {
        if (constraint->size() != n) throw DimensionMismatch("constraint and functional differ in length");
        basis = integer_kernel_basis(IntMatrix::from_rows({*constraint}));
    } else {
        basis = integer_kernel_basis(IntMatrix(0, n));
    }
    Int g = 0;
    IntVec witness(n, 0);
    for (const IntVec& k : basis) {
        Int val = dot(functional, k);
        auto [ng, s, t] = ext_gcd(g, val);
        if (ng == g) continue;
        witness = add(scale(s, witness), scale(t, k));
        g = ng;
    }
    if (g == 0) throw PreconditionError("functional vanishes identically on the constrained lattice");
    return {g, witness, basis};
}

/// Which minimality condition to test. Coordinates are gamma coordinates
/// (rk, c1_1..c1_rho, chi).
enum class MinimalityMode { Degree, ChiOnDegreeZero, ChiRankZero };

inline IntVec gamma_coords(const GammaVector& v) {
    IntVec x;
    x.push_back(v.r);
    x.insert(x.end(), v.c1.begin(), v.c1.end());
    x.push_back(v.chi);
    return x;
}

inline GammaVector gamma_from_coords(const IntVec& x) {
    if (x.size() < 2) throw DimensionMismatch("gamma coordinates need at least rank and chi");
    return {x.front(), IntVec(x.begin() + 1, x.end() - 1), x.back()};
}

/// deg_G as a functional on gamma coordinates.
inline IntVec degree_functional(const TwistData& G, const IntVec& H, const SurfaceModel& X) {
    IntVec hg = mat_vec(X.ns.gram(), H);
    IntVec f;
    f.push_back(-X.ns.pair(G.c1, H));
    for (Int c : hg) f.push_back(checked_mul(G.r, c));
    f.push_back(0);
    return f;
}

/// chi_G = chi(G, .) as a functional on gamma coordinates.
inline IntVec chi_functional(const TwistData& G, const SurfaceModel& X) {
    const std::size_t n = X.rank() + 2;
    IntVec f(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        f[i] = chi_pair_gamma(G.gamma(), gamma_from_coords(e), X);
    }
    return f;
}

struct ModeFunctional {
    IntVec functional;
    std::optional<IntVec> constraint;
};

inline ModeFunctional mode_functional(MinimalityMode mode, const TwistData& G, const IntVec& H,
                                      const SurfaceModel& X) {
    switch (mode) {
        case MinimalityMode::Degree:
            return {degree_functional(G, H, X), std::nullopt};
        case MinimalityMode::ChiOnDegreeZero:
            return {chi_functional(G, X), degree_functional(G, H, X)};
        case MinimalityMode::ChiRankZero: {
            IntVec r(X.rank() + 2, 0);
            r[0] = 1;
            return {chi_functional(G, X), r};
        }
    }
    throw PreconditionError("unknown minimality mode");
}

inline MinPositive min_positive_value(MinimalityMode mode, const TwistData& G, const IntVec& H,
                                      const SurfaceModel& X) {
    ModeFunctional mf = mode_functional(mode, G, H, X);
    return min_positive_value(mf.functional, mf.constraint);
}

/// True iff v lies on the constrained lattice for the mode and its functional
/// value equals the minimal positive value.
inline bool minimality_holds(const GammaVector& v, const TwistData& G, const IntVec& H, MinimalityMode mode,
                             const SurfaceModel& X) {
    ModeFunctional mf = mode_functional(mode, G, H, X);
    IntVec x = gamma_coords(v);
    if (mf.constraint && dot(*mf.constraint, x) != 0) return false;
    return dot(mf.functional, x) == min_positive_value(mf.functional, mf.constraint).value;
}

inline bool minimality_holds(const MukaiVector& v, const TwistData& G, const IntVec& H, MinimalityMode mode,
                             const SurfaceModel& X) {
    return minimality_holds(gamma_from_mukai(v, X), G, H, mode, X);
}

// ---------------------------------------------------------------------------
// ambient lattices for root configurations

/// Which invariant vectors a configuration is made of.
enum class VectorKind { Curve, Rank0, Mukai };

inline std::string to_string(VectorKind k) {
    switch (k) {
        case VectorKind::Curve: return "curve";
        case VectorKind::Rank0: return "rank0";
        case VectorKind::Mukai: return "mukai";
    }
    return "?";
}

/// Integral lattice holding invariant vectors as plain coordinates:
///   curve : c1                 with the intersection form,
///   rank0 : (c1, chi)          with NS + (0),
///   mukai : (r, c1, a)         with the Mukai form (integral a only).
struct Ambient {
    VectorKind kind = VectorKind::Curve;
    IntMatrix gram;
    std::size_t ns_rank = 0;

    static Ambient of(VectorKind kind, const SurfaceModel& X) {
        const std::size_t n = X.rank();
        Ambient a;
        a.kind = kind;
        a.ns_rank = n;
        const IntMatrix& g = X.ns.gram();
        switch (kind) {
            case VectorKind::Curve:
                a.gram = g;
                break;
            case VectorKind::Rank0:
                a.gram = IntMatrix(n + 1, n + 1);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) a.gram(i, j) = g(i, j);
                break;
            case VectorKind::Mukai:
                if (!X.k_trivial) throw PreconditionError("Mukai vectors need a numerically trivial canonical class");
                a.gram = IntMatrix(n + 2, n + 2);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) a.gram(i + 1, j + 1) = g(i, j);
                a.gram(0, n + 1) = a.gram(n + 1, 0) = -1;
                break;
        }
        return a;
    }

    std::size_t dim() const noexcept { return gram.rows(); }
    Int pair(const IntVec& x, const IntVec& y) const { return bilinear(gram, x, y); }
    Int square(const IntVec& x) const { return pair(x, x); }

    IntVec from(const MukaiVector& v) const {
        require(VectorKind::Mukai);
        IntVec x{v.r};
        x.insert(x.end(), v.c1.begin(), v.c1.end());
        x.push_back(v.a());
        check(x);
        return x;
    }
    IntVec from(const OneDimClass& v) const {
        require(VectorKind::Rank0);
        IntVec x = v.c1;
        x.push_back(v.chi);
        check(x);
        return x;
    }
    IntVec from_curve(const IntVec& c1) const {
        require(VectorKind::Curve);
        check(c1);
        return c1;
    }

    MukaiVector to_mukai(const IntVec& x) const {
        require(VectorKind::Mukai);
        check(x);
        return {x.front(), IntVec(x.begin() + 1, x.end() - 1), checked_mul(2, x.back())};
    }
    OneDimClass to_rank0(const IntVec& x) const {
        require(VectorKind::Rank0);
        check(x);
        return {IntVec(x.begin(), x.end() - 1), x.back()};
    }

    /// The divisor part of an ambient vector.
    IntVec c1_of(const IntVec& x) const {
        check(x);
        switch (kind) {
            case VectorKind::Curve: return x;
            case VectorKind::Rank0: return IntVec(x.begin(), x.end() - 1);
            case VectorKind::Mukai: return IntVec(x.begin() + 1, x.end() - 1);
        }
        return x;
    }

    void check(const IntVec& x) const {
        if (x.size() != dim()) throw DimensionMismatch("vector does not live in the " + to_string(kind) + " lattice");
    }

private:
    void require(VectorKind k) const {
        if (k != kind) throw PreconditionError("expected a " + to_string(kind) + " vector");
    }
};

// ---------------------------------------------------------------------------
// slope inequality

/// Searches r, d, x in [1, limit] and y in dZ with 0 < y/x < d/r for a case
/// where y >= d and x > r fail. Returns the first one found as (r, d, x, y).
inline std::optional<std::array<Int, 4>> slope_inequality_counterexample(Int limit) {
    for (Int r = 1; r <= limit; ++r)
        for (Int d = 1; d <= limit; ++d)
            for (Int x = 1; x <= limit; ++x)
                // y/x < d/r  <=>  y r < d x, and y > 0
                for (Int y = 1; checked_mul(y, r) < checked_mul(d, x); ++y) {
                    if (y % d != 0) continue;
                    if (!(y >= d && x > r)) return std::array<Int, 4>{r, d, x, y};
                }
    return std::nullopt;
}

}  // namespace mukai
