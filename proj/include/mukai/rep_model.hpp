// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rep_model.hpp
 * @brief Weight-graded modules modelling the direct sum of homologies of
 *        moduli spaces: weights, d-eigenvalues, center scalars, i-strings,
 *        the adjoint module of a rational double point and the loop module
 *        of an elliptic fiber.
 */

#pragma once

#include "mukai/lie.hpp"
#include "mukai/moduli.hpp"
#include "mukai/root_config.hpp"

#include <functional>
#include <random>

namespace mukai {

/// Graded dimension data at one key.
struct ModuleEntry {
    Int dim = 0;                        // total (middle-degree) dimension
    std::optional<Polynomial> poincare;  // per-degree data when known
};

/// Keys are offsets x in Z^S, standing for base + sum x_i v_i.
struct GradedModule {
    RootConfiguration config;
    IntVec base;
    std::map<IntVec, ModuleEntry> dims;
    std::function<std::optional<Int>(const IntVec&)> exists;  // on offsets
    std::function<bool(const IntVec&)> in_scope;               // offsets the module is built over; empty = all

    IntVec vector_at(const IntVec& offset) const { return add(base, config.combine(offset)); }
    IntVec weight_at(const IntVec& offset) const { return weight(vector_at(offset), config); }

    Int total_dim() const {
        Int s = 0;
        for (const auto& [k, e] : dims) s = checked_add(s, e.dim);
        return s;
    }

    std::map<IntVec, Int> character() const {
        std::map<IntVec, Int> ch;
        for (const auto& [k, e] : dims)
            if (e.dim != 0) ch[k] = e.dim;
        return ch;
    }
};

/// Base point rho = class of a point in the ambient lattice, or zero when the
/// ambient has no such coordinate (plain curve classes).
inline IntVec point_class(const Ambient& amb) {
    IntVec rho(amb.dim(), 0);
    if (amb.kind != VectorKind::Curve) rho.back() = 1;
    return rho;
}

/// Keys whose dimension disagrees with the existence predicate, and excluded
/// in-scope neighbours key +- e_i that pass it.
inline std::vector<IntVec> predicate_violations(const GradedModule& M) {
    std::vector<IntVec> bad;
    for (const auto& [x, e] : M.dims) {
        if (e.dim <= 0) continue;
        auto d = M.exists(x);
        if (!d || *d != e.dim) bad.push_back(x);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (Int s : {-1, 1}) {
                IntVec y = x;
                y[i] += s;
                if (M.dims.count(y) || (M.in_scope && !M.in_scope(y))) continue;
                if (M.exists(y)) bad.push_back(y);
            }
    }
    return bad;
}

// ---------------------------------------------------------------------------
// d-eigenvalue and center

/// A rational w with <w, v_i> = delta_{i, zero node}; free variables are set
/// to zero.
inline RatVec d_vector(const RootConfiguration& S) {
    if (S.kind != ConfigKind::Affine) throw PreconditionError("d-eigenvalue needs an affine configuration");
    RatMatrix a(S.size(), S.ambient.dim());
    for (std::size_t i = 0; i < S.size(); ++i) {
        IntVec gv = mat_vec(S.ambient.gram, S.vectors[i]);
        for (std::size_t j = 0; j < gv.size(); ++j) a(i, j) = gv[j];
    }
    RatVec rhs(S.size(), Rational(0));
    rhs[S.zero_node] = 1;
    auto w = solve(a, rhs);
    if (!w) throw PreconditionError("no w with <w, v_i> = delta_{i0} exists in the ambient lattice");
    return *w;
}

inline Rational d_eigenvalue(const IntVec& v, const RootConfiguration& S) {
    S.ambient.check(v);
    RatVec w = d_vector(S);
    IntVec gv = mat_vec(S.ambient.gram, v);
    Rational s = 0;
    for (std::size_t j = 0; j < gv.size(); ++j) s += w[j] * gv[j];
    return s;
}

/// <v, v(G)>.
inline Int center_scalar(const IntVec& v, const IntVec& vG, const RootConfiguration& S) {
    return S.pair(v, vG);
}

/// sum_i a_i <v_i, v>.
inline Int center_scalar_from_marks(const IntVec& v, const RootConfiguration& S) {
    if (S.kind != ConfigKind::Affine) throw PreconditionError("marks exist only for affine configurations");
    IntVec w = weight(v, S);
    return dot(S.marks, w);
}

// ---------------------------------------------------------------------------
// i-strings

using ExistencePredicate = std::function<std::optional<Int>(const IntVec&)>;

/// M_H(x) on a K3-type ambient: nonempty iff <x^2> >= -2, of dimension <x^2> + 1 + pg.
inline ExistencePredicate k3_predicate(const Ambient& amb, Int pg) {
    return [amb, pg](const IntVec& x) -> std::optional<Int> {
        Int s = amb.square(x);
        if (s < -(1 + pg)) return std::nullopt;
        return s + 1 + pg;
    };
}

struct StringPoint {
    Int k = 0;
    IntVec vector;
    Int dim = 0;
};

/// The i-string {v + k v_i : exists}. Candidates are limited to the k with
/// <(v + k v_i)^2> >= -(1 + pg), outside of which every moduli space is empty.
inline std::vector<StringPoint> build_string(const IntVec& v, std::size_t i, const RootConfiguration& S,
                                             const ExistencePredicate& exists, Int pg) {
    if (i >= S.size()) throw std::out_of_range("string index out of range");
    const IntVec& vi = S.vectors[i];
    if (S.ambient.square(vi) != -2) throw PreconditionError("string direction is not a (-2)-vector");
    const Int b = S.pair(v, vi);
    const Int v2 = S.ambient.square(v);
    // <(v + k v_i)^2> = v2 + 2kb - 2k^2 >= -(1+pg)
    auto inside = [&](Int k) { return v2 + 2 * k * b - 2 * k * k >= -(1 + pg); };
    std::vector<StringPoint> out;
    Int centre = floor_div(b, 2);
    Int lo = centre, hi = centre + 1;
    while (inside(lo)) --lo;
    while (inside(hi)) ++hi;
    for (Int k = lo + 1; k < hi; ++k) {
        IntVec x = axpy(v, k, vi);
        if (auto d = exists(x)) out.push_back({k, x, *d});
    }
    return out;
}

// ---------------------------------------------------------------------------
// rational double point module

/// Module over rho with keys rho + x for <x^2> = -2 (dimension 1) and rho
/// itself (dimension rank, spanned by the exceptional curves).
inline GradedModule rdp_adjoint_module(const RootConfiguration& S) {
    if (S.kind != ConfigKind::Finite) throw PreconditionError("RDP module needs a finite ADE configuration");
    GradedModule M;
    M.config = S;
    M.base = point_class(S.ambient);
    const IntMatrix C = S.cartan;
    const Int rank = static_cast<Int>(S.size());
    M.exists = [C, rank](const IntVec& x) -> std::optional<Int> {
        Int q = bilinear(C, x, x);
        if (q == 0) return rank;
        if (q == 2) return 1;
        return std::nullopt;
    };
    for (const IntVec& x : enumerate_quadratic(C, IntVec(S.size(), 0), 2)) {
        if (auto d = M.exists(x)) M.dims[x] = {*d, std::nullopt};
    }
    return M;
}

// ---------------------------------------------------------------------------
// elliptic fiber module

struct FiberDegree {
    Int m = 0;
    Int total = 0;
    Int sub = 0;       // dim of the loop part t^m (x) g
    Int quotient = 0;  // dim of C t^m
};

struct FiberModule {
    GradedModule module;
    std::vector<FiberDegree> degrees;
};

/// Keys rho + m delta + alpha (alpha a root of the finite part, dimension 1)
/// and rho + m delta (dimension rank + 1) for |m| <= loop_range.
inline FiberModule affine_fiber_module(const RootConfiguration& S, Int loop_range) {
    if (S.kind != ConfigKind::Affine) throw PreconditionError("fiber module needs an affine configuration");
    if (loop_range < 0) throw PreconditionError("loop range must be nonnegative");
    std::vector<std::size_t> fin = S.finite_part();
    const IntMatrix fin_cartan = S.cartan.submatrix(fin);
    RootSystem rs = root_system(fin_cartan);
    const Int rank = static_cast<Int>(fin.size());

    FiberModule F;
    GradedModule& M = F.module;
    M.config = S;
    M.base = point_class(S.ambient);
    const IntMatrix C = S.cartan;
    M.exists = [C, rank](const IntVec& x) -> std::optional<Int> {
        Int q = bilinear(C, x, x);
        if (q == 0) return rank + 1;  // x in Z delta
        if (q == 2) return 1;
        return std::nullopt;
    };
    const std::size_t z = S.zero_node;
    M.in_scope = [z, loop_range](const IntVec& x) { return x[z] >= -loop_range && x[z] <= loop_range; };
    for (Int m = -loop_range; m <= loop_range; ++m) {
        IntVec md = scale(m, S.marks);
        FiberDegree deg{m, 0, 0, 1};
        M.dims[md] = {rank + 1, std::nullopt};
        deg.total += rank + 1;
        for (const IntVec& alpha : rs.all()) {
            IntVec x = md;
            for (std::size_t j = 0; j < fin.size(); ++j) x[fin[j]] += alpha[j];
            M.dims[x] = {1, std::nullopt};
            deg.total += 1;
        }
        deg.sub = static_cast<Int>(rs.all().size()) + rank;
        F.degrees.push_back(deg);
    }
    return F;
}

// ---------------------------------------------------------------------------
// Weyl invariance of Betti numbers

struct WeylReport {
    std::vector<std::vector<std::size_t>> words;
    std::size_t failures = 0;
    Polynomial reference;
    bool pass() const { return failures == 0; }
};

inline WeylReport verify_weyl_invariance(const IntVec& v, const RootConfiguration& S, std::size_t trials,
                                         std::uint64_t seed, std::size_t max_length = 12) {
    if (S.ambient.kind != VectorKind::Mukai) throw PreconditionError("Weyl invariance check needs Mukai vectors");
    if (S.size() == 0) throw PreconditionError("empty configuration");
    WeylReport rep;
    rep.reference = poincare_from_square(S.ambient.square(v));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(0, max_length), node(0, S.size() - 1);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> word(len(rng));
        for (auto& i : word) i = node(rng);
        IntVec w = apply_word(word, v, S);
        if (poincare_from_square(S.ambient.square(w)) != rep.reference) ++rep.failures;
        rep.words.push_back(std::move(word));
    }
    return rep;
}

}  // namespace mukai
