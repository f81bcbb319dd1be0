// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file elliptic.hpp
 * @brief Existence criteria for stable sheaves on a rational elliptic surface
 *        with a section, the nef test on an E8^(1) fiber, the rigid bundles
 *        E_D and the lexicographic slope comparison for fiber-like
 *        polarizations.
 *
 * Pic(X) = <sigma, f> + E8(-1) with sigma^2 = -1, (sigma, f) = 1, f = -K.
 * Every class C with (C^2) = (C, K) = -1 is a section class
 * C = sigma + lambda + m f with lambda in E8(-1) and m = -(lambda^2)/2.
 */

#pragma once

#include "mukai/cartan.hpp"
#include "mukai/enumerate.hpp"
#include "mukai/linalg.hpp"
#include "mukai/vectors.hpp"

namespace mukai {

/// A surface model together with the section/fiber marking.
struct RationalEllipticModel {
    SurfaceModel surface;
    IntVec sigma;
    IntVec f;
    std::vector<IntVec> e8;  // C_1..C_8, Bourbaki order
    IntMatrix cartan;        // -(C_i, C_j), the E8 Cartan matrix
    IntVec marks;            // a_0..a_8 with a_0 = 1
    IntVec c0;               // f - sum_{i>=1} a_i C_i

    /// Reads sigma, f and C1..C8 from the named classes and checks the marking.
    static RationalEllipticModel from(const SurfaceModel& X) {
        RationalEllipticModel M;
        M.surface = X;
        M.sigma = X.named("sigma");
        M.f = X.named("f");
        for (std::size_t i = 1; i <= 8; ++i) M.e8.push_back(X.named("C" + std::to_string(i)));
        const auto& ns = X.ns;
        if (X.chi_O != 1 || X.pg != 0) throw PreconditionError("rational surfaces have chi(O) = 1 and pg = 0");
        if (M.f != scale(-1, X.canonical)) throw PreconditionError("f must equal -K");
        if (ns.square(M.f) != 0 || ns.pair(M.sigma, M.f) != 1 || ns.square(M.sigma) != -1)
            throw PreconditionError("sigma and f must satisfy f^2 = 0, (sigma, f) = 1, sigma^2 = -1");
        M.cartan = IntMatrix(8, 8);
        for (std::size_t i = 0; i < 8; ++i) {
            if (ns.pair(M.e8[i], M.sigma) != 0 || ns.pair(M.e8[i], M.f) != 0)
                throw PreconditionError("C" + std::to_string(i + 1) + " is not orthogonal to sigma and f");
            for (std::size_t j = 0; j < 8; ++j) M.cartan(i, j) = -ns.pair(M.e8[i], M.e8[j]);
        }
        if (M.cartan != finite_cartan(CartanType{'E', 8, false}))
            throw PreconditionError("C1..C8 do not form an E8 diagram in Bourbaki order");
        // sigma, f, C1..C8 must be a Z-basis of Pic
        IntMatrix basis(10, X.rank());
        for (std::size_t j = 0; j < X.rank(); ++j) {
            basis(0, j) = M.sigma[j];
            basis(1, j) = M.f[j];
            for (std::size_t i = 0; i < 8; ++i) basis(i + 2, j) = M.e8[i][j];
        }
        SmithForm snf = smith_normal_form(basis);
        bool unimodular = X.rank() == 10 && snf.rank == 10;
        for (std::size_t i = 0; unimodular && i < 10; ++i) unimodular = snf.diagonal(i, i) == 1 || snf.diagonal(i, i) == -1;
        if (!unimodular) throw PreconditionError("sigma, f, C1..C8 do not span Pic");
        AffineData aff = affine_extension(M.cartan);
        M.marks = aff.marks;
        M.c0 = M.f;
        for (std::size_t i = 0; i < 8; ++i) M.c0 = axpy(M.c0, -aff.theta[i], M.e8[i]);
        if (X.has_named("C0") && X.named("C0") != M.c0) throw PreconditionError("C0 differs from f - theta");
        return M;
    }

    Int pair(const IntVec& x, const IntVec& y) const { return surface.ns.pair(x, y); }

    IntVec embed(const IntVec& lambda) const {
        if (lambda.size() != 8) throw DimensionMismatch("E8 coefficient vector must have 8 entries");
        IntVec out(surface.rank(), 0);
        for (std::size_t i = 0; i < 8; ++i) out = axpy(out, lambda[i], e8[i]);
        return out;
    }

    /// (D, C_i) for i = 1..8.
    IntVec e8_pairings(const IntVec& D) const {
        IntVec b(8);
        for (std::size_t i = 0; i < 8; ++i) b[i] = pair(D, e8[i]);
        return b;
    }

    /// sigma + lambda + m f with m = -(lambda^2)/2.
    IntVec section_class(const IntVec& lambda) const {
        const Int m = bilinear(cartan, lambda, lambda) / 2;
        return axpy(add(sigma, embed(lambda)), m, f);
    }
};

inline bool is_exceptional_class(const IntVec& C, const SurfaceModel& X) {
    X.ns.check(C);
    return X.ns.square(C) == -1 && X.ns.pair(C, X.canonical) == -1;
}

enum class Verdict { Exists, Empty, NotApplicable };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Exists: return "Exists";
        case Verdict::Empty: return "Empty";
        case Verdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

/// Squared radius of {x : x^T Q x + 2 b.x <= bound} around its centre.
inline Rational ellipsoid_radius(const IntMatrix& q, const IntVec& b, const Rational& bound) {
    RatMatrix qi = inverse(to_rational(q));
    Rational s = bound;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s += qi(i, j) * b[i] * b[j];
    return s;
}

// ---------------------------------------------------------------------------
// rank 0

struct Rank0Result {
    Verdict verdict = Verdict::Exists;
    std::optional<IntVec> witness;  // exceptional class with (D, C) < 0
    std::optional<Int> witness_pairing;
    Int fiber_degree = 0;  // l = (D, f)
    Rational enumeration_radius = 0;
    std::size_t classes_checked = 0;
};

/// M_H^G(0, D, chi) is nonempty for general (H, G) iff (D, C) >= 0 for every
/// exceptional class C. `general` is the caller's assertion that (H, G) is general.
inline Rank0Result exists_rank0(const IntVec& D, Int chi, const RationalEllipticModel& M, bool general = true) {
    const SurfaceModel& X = M.surface;
    X.ns.check(D);
    if (!general) throw PreconditionError("the criterion holds only for general (H, G)");
    if (X.ns.square(D) < 0) throw PreconditionError("(D^2) < 0");
    IntVec all = D;
    all.push_back(chi);
    if (gcd_of(all) != 1) throw PreconditionError("(0, D, chi) is not primitive");

    Rank0Result res;
    const Int l = M.pair(D, M.f);
    const Int ds = M.pair(D, M.sigma);
    res.fiber_degree = l;
    auto record = [&](const IntVec& C) {
        if (!res.witness || C < *res.witness) {
            res.witness = C;
            res.witness_pairing = M.pair(D, C);
        }
    };

    if (l == 0) {
        // (D^2) >= 0 and (D, f) = 0 force D = b f, and (D, C) = b for every section class
        res.classes_checked = 1;
        if (ds < 0) record(M.sigma);
    } else if (l > 0) {
        // (D, C) = (D, sigma) + b.lambda + (l/2) lambda^T A lambda < 0
        IntMatrix q(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) q(i, j) = checked_mul(l, M.cartan(i, j));
        const IntVec b = M.e8_pairings(D);
        const Rational bound = Rational(-2 * ds - 1);
        res.enumeration_radius = ellipsoid_radius(q, b, bound);
        res.classes_checked = for_each_in_ellipsoid(q, b, bound, [&](const IntVec& lambda) { record(M.section_class(lambda)); });
    } else {
        // the quadratic term is negative definite: take the smallest shell holding a violator
        for (Int norm = 0; !res.witness; norm += 2) {
            for (const IntVec& lambda : enumerate_quadratic(M.cartan, IntVec(8, 0), norm)) {
                if (bilinear(M.cartan, lambda, lambda) != norm) continue;
                ++res.classes_checked;
                IntVec C = M.section_class(lambda);
                if (M.pair(D, C) < 0) record(C);
            }
        }
    }
    if (res.witness) {
        if (!is_exceptional_class(*res.witness, X) || *res.witness_pairing >= 0)
            throw std::logic_error("exists_rank0 produced an invalid witness");
        res.verdict = Verdict::Empty;
    }
    return res;
}

// ---------------------------------------------------------------------------
// nef cone on an E8^(1) fiber

struct FiberDecomposition {
    Int r = 0;   // coefficient of sigma
    Int n = 0;   // coefficient of f
    IntVec xi;   // coefficients on C_1..C_8
};

inline FiberDecomposition decompose(const IntVec& D, const RationalEllipticModel& M) {
    M.surface.ns.check(D);
    FiberDecomposition out;
    out.r = M.pair(D, M.f);
    out.n = M.pair(D, M.sigma) + out.r;
    IntVec rest = sub(D, add(scale(out.r, M.sigma), scale(out.n, M.f)));
    // (rest, C_j) = -sum_i xi_i A_ij
    RatMatrix a = to_rational(M.cartan);
    RatVec rhs(8);
    for (std::size_t j = 0; j < 8; ++j) rhs[j] = -M.pair(rest, M.e8[j]);
    auto x = solve(a, rhs);
    if (!x) throw PreconditionError("malformed fiber decomposition");
    out.xi.resize(8);
    for (std::size_t i = 0; i < 8; ++i) {
        if (denominator((*x)[i]) != 1) throw PreconditionError("malformed fiber decomposition");
        out.xi[i] = to_int((*x)[i]);
    }
    if (M.embed(out.xi) != rest) throw PreconditionError("malformed fiber decomposition");
    return out;
}

/// D = r sigma + n f + xi is nef iff n >= r, (xi, C_i) >= 0 for i = 1..8 and
/// sum_{i>=1} a_i (xi, C_i) <= r.
inline bool nef_e8_fiber(Int r, Int n, const IntVec& xi, const RationalEllipticModel& M) {
    if (xi.size() != 8) throw DimensionMismatch("xi must have 8 coefficients on C_1..C_8");
    if (M.marks.size() != 9 || M.marks[0] != 1) throw PreconditionError("fiber marks must start with a_0 = 1");
    if (n < r) return false;
    const IntVec x = M.embed(xi);
    Int weighted = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        const Int p = M.pair(x, M.e8[i]);
        if (p < 0) return false;
        weighted = checked_add(weighted, checked_mul(M.marks[i + 1], p));
    }
    return weighted <= r;
}

inline bool nef_e8_fiber(const IntVec& D, const RationalEllipticModel& M) {
    FiberDecomposition d = decompose(D, M);
    return nef_e8_fiber(d.r, d.n, d.xi, M);
}

// ---------------------------------------------------------------------------
// rigid bundles E_D and torsion free sheaves

/// gamma = (r, d sigma + D + k f, chi) with chi solved from chi(gamma, gamma) = 1,
/// or nullopt when chi is not integral.
inline std::optional<GammaVector> e_d_class(Int r, Int d, const IntVec& D, Int k, const RationalEllipticModel& M) {
    const SurfaceModel& X = M.surface;
    IntVec c1 = add(add(scale(d, M.sigma), D), scale(k, M.f));
    // chi(gamma, gamma) = 2 r chi - r^2 chi(O) - c1^2 + r (c1, K)
    const Int num = 1 + r * r * X.chi_O + X.ns.square(c1) - r * X.ns.pair(c1, X.canonical);
    if (num % (2 * r) != 0) return std::nullopt;
    return GammaVector{r, c1, num / (2 * r)};
}

/// The class of E_D, with the f-twist k the least nonnegative one making chi integral.
inline GammaVector normalize_E_D(Int r, Int d, const IntVec& D, const RationalEllipticModel& M) {
    M.surface.ns.check(D);
    if (r <= 0) throw PreconditionError("r must be positive");
    if (std::gcd(r, d) != 1) throw PreconditionError("gcd(r, d) must be 1");
    if (M.pair(D, M.sigma) != 0 || M.pair(D, M.f) != 0) throw PreconditionError("D must lie in <sigma, f>^perp");
    for (Int k = 0; k < r; ++k)
        if (auto g = e_d_class(r, d, D, k, M)) return *g;
    throw PreconditionError("no f-twist gives an integral chi(E_D)");
}

struct TorsionFreeResult {
    Verdict verdict = Verdict::Exists;
    Int l = 0;
    Int self_chi = 0;                    // chi(F, F)
    std::optional<GammaVector> witness;  // E_D with chi(E_D, F) > 0, maximizing it
    std::optional<Int> witness_chi;
    std::optional<IntVec> witness_D;     // E8 coefficients of D
    bool mu_stable_locally_free = false;
    Rational enumeration_radius = 0;
    std::size_t classes_checked = 0;
};

/// For H close to f: F is represented by a stable sheaf iff chi(E_D, F) <= 0 for
/// every E_D in E(r, d). `near_f` is the caller's assertion about H.
inline TorsionFreeResult exists_torsionfree(const GammaVector& F, Int r, Int d, const RationalEllipticModel& M,
                                            bool near_f = true) {
    const SurfaceModel& X = M.surface;
    X.ns.check(F.c1);
    if (!near_f) throw PreconditionError("the criterion holds only for H sufficiently close to f");
    if (r <= 0 || std::gcd(r, d) != 1) throw PreconditionError("need r > 0 and gcd(r, d) = 1");
    if (gcd_of(gamma_coords(F)) != 1) throw PreconditionError("F is not primitive");
    if (F.r <= 0 || F.r % r != 0) throw PreconditionError("rk F must be a positive multiple of r");
    TorsionFreeResult res;
    res.l = F.r / r;
    if (M.pair(F.c1, M.f) != checked_mul(res.l, d)) throw PreconditionError("(c1(F), f) must equal l d");
    res.self_chi = chi_pair_gamma(F, F, X);
    if (res.self_chi > 0) {
        res.verdict = Verdict::NotApplicable;
        return res;
    }

    // chi(E_D, F) = chi(E_0, F) - (l/2) lambda^T A lambda - b.lambda, b_i = (C_i, c1(F))
    const Int base = chi_pair_gamma(normalize_E_D(r, d, IntVec(X.rank(), 0), M), F, X);
    const IntVec b = M.e8_pairings(F.c1);
    IntMatrix q(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) q(i, j) = checked_mul(res.l, M.cartan(i, j));
    const Rational bound = Rational(2 * base - 2);
    res.enumeration_radius = ellipsoid_radius(q, b, bound);
    res.classes_checked = for_each_in_ellipsoid(q, b, bound, [&](const IntVec& lambda) {
        GammaVector E = normalize_E_D(r, d, M.embed(lambda), M);
        const Int c = chi_pair_gamma(E, F, X);
        if (2 * c != 2 * base - bilinear(q, lambda, lambda) - 2 * dot(b, lambda))
            throw std::logic_error("chi(E_D, F) is not the expected quadratic in D");
        if (!res.witness_chi || c > *res.witness_chi ||
            (c == *res.witness_chi && gamma_coords(E) < gamma_coords(*res.witness))) {
            res.witness = E;
            res.witness_chi = c;
            res.witness_D = lambda;
        }
    });
    if (res.witness) {
        res.verdict = Verdict::Empty;
    } else {
        res.mu_stable_locally_free = res.l * r > 1;
    }
    return res;
}

// ---------------------------------------------------------------------------
// lexicographic slopes

struct SlopeDatum {
    IntVec c1;
    Int chi_G = 0;
};

/// True iff the slope triple chi_G/(c1, f), chi_G/(c1, L), chi_G/(c1, eps) of F
/// is lexicographically smaller than that of E. All degrees must be positive.
inline bool lex_slope_less(const SlopeDatum& F, const SlopeDatum& E, const IntVec& f, const IntVec& L,
                           const IntVec& eps, const IntersectionLattice& ns) {
    for (const IntVec* key : {&f, &L, &eps}) {
        const Int dF = ns.pair(F.c1, *key);
        const Int dE = ns.pair(E.c1, *key);
        if (dF == 0 || dE == 0) throw PreconditionError("zero degree in slope comparison");
        if (dF < 0 || dE < 0) throw PreconditionError("negative degree in slope comparison");
        const Int lhs = checked_mul(F.chi_G, dE);
        const Int rhs = checked_mul(E.chi_G, dF);
        if (lhs != rhs) return lhs < rhs;
    }
    return false;
}

}  // namespace mukai
