// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mukai/elliptic.hpp"
#include "mukai/models.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <functional>
#include <random>
#include <set>

using namespace mukai;

namespace {

const RationalEllipticModel& model() {
    static const RationalEllipticModel M = RationalEllipticModel::from(builtin_model("rational-elliptic-e8").surface);
    return M;
}

IntVec basis(std::size_t i) {
    IntVec v(10, 0);
    v[i] = 1;
    return v;
}

const std::vector<IntVec>& exceptional() {
    static const std::vector<IntVec> all = oracle::exceptional_classes(12);
    return all;
}

bool oracle_exists(const IntVec& D) {
    for (const IntVec& C : exceptional())
        if (oracle::blowup_pair(D, C) < 0) return false;
    return true;
}

IntVec reflect_curve(const IntVec& x, const IntVec& C) { return axpy(x, model().pair(x, C), C); }

// The class of E_D solved directly from chi(gamma, gamma) = 1, scanning f-twists.
std::optional<GammaVector> oracle_e_d(Int r, Int d, const IntVec& D) {
    const RationalEllipticModel& M = model();
    for (Int k = 0; k < r; ++k) {
        IntVec c1 = axpy(axpy(D, d, M.sigma), k, M.f);
        GammaVector g{r, c1, 0};
        const Int s0 = chi_pair_gamma(g, g, M.surface);
        if ((1 - s0) % (2 * r) == 0) {
            g.chi = (1 - s0) / (2 * r);
            return g;
        }
    }
    return std::nullopt;
}

// Largest chi(E_D, F) over D in the E8 box |lambda_i| <= box.
Int oracle_max_chi(const GammaVector& F, Int r, Int d, Int box) {
    const RationalEllipticModel& M = model();
    Int best = std::numeric_limits<Int>::min();
    for (const IntVec& lambda : oracle::box_search(8, box, [](const IntVec&) { return true; })) {
        auto E = oracle_e_d(r, d, M.embed(lambda));
        if (!E) {
            ADD_FAILURE() << "no integral E_D";
        } else {
            best = std::max(best, chi_pair_gamma(*E, F, M.surface));
        }
    }
    return best;
}

}  // namespace

TEST(RationalModel, BuiltinMarking) {
    const RationalEllipticModel& M = model();
    EXPECT_EQ(M.marks, (IntVec{1, 2, 3, 4, 6, 5, 4, 3, 2}));
    EXPECT_EQ(M.pair(M.c0, M.c0), -2);
    EXPECT_EQ(M.pair(M.c0, M.f), 0);
    EXPECT_EQ(M.pair(M.c0, M.sigma), 1);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(M.pair(M.e8[i], M.surface.canonical), 0);
}

TEST(RationalModel, RejectsBadMarkings) {
    SurfaceModel X = builtin_model("rational-elliptic-e8").surface;
    {
        SurfaceModel Y = X;
        std::swap(Y.named_classes["C1"], Y.named_classes["C2"]);
        EXPECT_THROW(RationalEllipticModel::from(Y), PreconditionError);
    }
    {
        SurfaceModel Y = X;
        Y.named_classes["f"] = basis(0);
        EXPECT_THROW(RationalEllipticModel::from(Y), PreconditionError);
    }
    {
        SurfaceModel Y = X;
        Y.named_classes["sigma"] = basis(8);
        EXPECT_THROW(RationalEllipticModel::from(Y), PreconditionError);
    }
    {
        SurfaceModel Y = X;
        Y.named_classes["C0"] = basis(1);
        EXPECT_THROW(RationalEllipticModel::from(Y), PreconditionError);
    }
    EXPECT_ANY_THROW(RationalEllipticModel::from(builtin_model("k3-elliptic").surface));
}

TEST(ExceptionalClass, Examples) {
    const SurfaceModel& X = model().surface;
    EXPECT_TRUE(is_exceptional_class(basis(1), X));
    EXPECT_TRUE(is_exceptional_class(sub(sub(basis(0), basis(1)), basis(2)), X));
    EXPECT_FALSE(is_exceptional_class(basis(0), X));
    EXPECT_FALSE(is_exceptional_class(model().f, X));
    EXPECT_THROW(is_exceptional_class(IntVec{1, 0}, X), DimensionMismatch);
}

TEST(ExceptionalClass, MatchesOracleOnUnitBox) {
    const SurfaceModel& X = model().surface;
    std::set<IntVec> listed(exceptional().begin(), exceptional().end());
    for (const IntVec& C : exceptional()) ASSERT_TRUE(is_exceptional_class(C, X)) << to_string(C);
    for (const IntVec& x : oracle::box_search(10, 1, [](const IntVec&) { return true; }))
        EXPECT_EQ(is_exceptional_class(x, X), listed.count(x) == 1) << to_string(x);
}

TEST(ExceptionalClass, SectionClassesAreExceptional) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> c(-3, 3);
    for (int t = 0; t < 200; ++t) {
        IntVec lambda(8);
        for (auto& x : lambda) x = c(rng);
        IntVec C = model().section_class(lambda);
        EXPECT_TRUE(is_exceptional_class(C, model().surface));
        EXPECT_EQ(model().pair(C, model().f), 1);
    }
}

TEST(ExistsRank0, Examples) {
    const RationalEllipticModel& M = model();
    Rank0Result r = exists_rank0(M.f, 1, M);
    EXPECT_EQ(r.verdict, Verdict::Exists);
    EXPECT_EQ(r.fiber_degree, 0);
    EXPECT_FALSE(r.witness);

    EXPECT_THROW(exists_rank0(basis(9), 1, M), PreconditionError);
    EXPECT_THROW(exists_rank0(scale(2, M.f), 2, M), PreconditionError);
    EXPECT_THROW(exists_rank0(M.f, 1, M, false), PreconditionError);

    // -f meets every section negatively
    Rank0Result neg = exists_rank0(scale(-1, M.f), 1, M);
    ASSERT_EQ(neg.verdict, Verdict::Empty);
    EXPECT_EQ(*neg.witness_pairing, -1);

    // h is nef
    EXPECT_EQ(exists_rank0(basis(0), 0, M).verdict, Verdict::Exists);
    // the conic pencil h - e1
    EXPECT_EQ(exists_rank0(sub(basis(0), basis(1)), 0, M).verdict, Verdict::Exists);
    // 3h - e1 - e2 + e3 has (D, e3) = -1
    IntVec D = add(sub(sub(scale(3, basis(0)), basis(1)), basis(2)), basis(3));
    ASSERT_EQ(M.pair(D, D), 6);
    Rank0Result e = exists_rank0(D, 1, M);
    ASSERT_EQ(e.verdict, Verdict::Empty);
    EXPECT_LT(M.pair(D, *e.witness), 0);
}

TEST(ExistsRank0, MatchesBruteForceOnHeightFourGrid) {
    const RationalEllipticModel& M = model();
    std::vector<IntVec> grid = oracle::height_grid(4);
    ASSERT_GT(grid.size(), 400u);
    double slowest = 0;
    std::size_t empty = 0;
    for (const IntVec& D : grid) {
        auto t0 = std::chrono::steady_clock::now();
        Rank0Result r = exists_rank0(D, 1, M);
        slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        const bool expected = oracle_exists(D);
        ASSERT_EQ(r.verdict == Verdict::Exists, expected) << to_string(D);
        if (r.verdict == Verdict::Empty) {
            ++empty;
            EXPECT_TRUE(std::binary_search(exceptional().begin(), exceptional().end(), *r.witness)) << to_string(D);
            EXPECT_EQ(oracle::blowup_pair(D, *r.witness), *r.witness_pairing);
        }
    }
    EXPECT_GT(empty, 0u);
    EXPECT_LT(empty, grid.size());
    EXPECT_LT(slowest, 1.0);
}

TEST(ExistsRank0, WitnessIsSmallestViolator) {
    const RationalEllipticModel& M = model();
    for (const IntVec& D : oracle::height_grid(3)) {
        if (M.pair(D, M.f) <= 0) continue;
        Rank0Result r = exists_rank0(D, 1, M);
        std::optional<IntVec> first;
        for (const IntVec& C : exceptional())
            if (oracle::blowup_pair(D, C) < 0 && (!first || C < *first)) first = C;
        ASSERT_EQ(r.witness.has_value(), first.has_value()) << to_string(D);
        if (first) { EXPECT_EQ(*r.witness, *first) << to_string(D); }
    }
}

TEST(ExistsRank0, WeylInvariance) {
    const RationalEllipticModel& M = model();
    std::vector<IntVec> curves{M.c0};
    curves.insert(curves.end(), M.e8.begin(), M.e8.end());
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, 8);
    std::vector<IntVec> grid = oracle::height_grid(3);
    std::uniform_int_distribution<std::size_t> pickD(0, grid.size() - 1);
    for (int t = 0; t < 300; ++t) {
        const IntVec D = grid[pickD(rng)];
        IntVec w = D;
        for (int k = 0; k < 6; ++k) w = reflect_curve(w, curves[pick(rng)]);
        ASSERT_EQ(M.pair(w, w), M.pair(D, D));
        EXPECT_EQ(exists_rank0(D, 1, M).verdict, exists_rank0(w, 1, M).verdict) << to_string(D) << " -> " << to_string(w);
    }
}

TEST(NefFiber, Examples) {
    const RationalEllipticModel& M = model();
    const IntVec zero(8, 0);
    EXPECT_TRUE(nef_e8_fiber(1, 1, zero, M));
    EXPECT_FALSE(nef_e8_fiber(1, 0, zero, M));
    // xi dual to C_1: (xi, C_i) = delta_{i1}, weighted sum a_1 = 2
    RatMatrix inv = inverse(to_rational(M.cartan));
    IntVec xi(8);
    for (std::size_t i = 0; i < 8; ++i) xi[i] = -to_int(inv(i, 0));
    const IntVec x = M.embed(xi);
    for (std::size_t i = 0; i < 8; ++i) ASSERT_EQ(M.pair(x, M.e8[i]), i == 0 ? 1 : 0);
    EXPECT_FALSE(nef_e8_fiber(1, 1, xi, M));
    EXPECT_TRUE(nef_e8_fiber(2, 2, xi, M));
    EXPECT_FALSE(nef_e8_fiber(2, 2, scale(-1, xi), M));
    EXPECT_THROW(nef_e8_fiber(1, 1, IntVec(7, 0), M), DimensionMismatch);
}

TEST(NefFiber, DecompositionRoundTrip) {
    const RationalEllipticModel& M = model();
    for (const IntVec& D : oracle::height_grid(2)) {
        FiberDecomposition d = decompose(D, M);
        IntVec back = add(add(scale(d.r, M.sigma), scale(d.n, M.f)), M.embed(d.xi));
        EXPECT_EQ(back, D);
    }
}

TEST(NefFiber, ImpliesNonnegativeOnCurvesAndExistence) {
    const RationalEllipticModel& M = model();
    std::size_t nef = 0;
    for (const IntVec& D : oracle::height_grid(4)) {
        if (!nef_e8_fiber(D, M)) continue;
        ++nef;
        EXPECT_GE(M.pair(D, M.c0), 0);
        EXPECT_GE(M.pair(D, M.sigma), 0);
        for (const IntVec& C : M.e8) EXPECT_GE(M.pair(D, C), 0);
        EXPECT_EQ(exists_rank0(D, 1, M).verdict, Verdict::Exists) << to_string(D);
    }
    EXPECT_GE(nef, 10u);
}

TEST(NefFiber, AgreesWithCurveTest) {
    // the effective cone of the fiber plus sigma is generated by sigma, C_0..C_8
    const RationalEllipticModel& M = model();
    for (const IntVec& D : oracle::height_grid(3)) {
        bool curves = M.pair(D, M.sigma) >= 0 && M.pair(D, M.c0) >= 0;
        for (const IntVec& C : M.e8) curves = curves && M.pair(D, C) >= 0;
        EXPECT_EQ(nef_e8_fiber(D, M), curves) << to_string(D);
    }
}

TEST(NormalizeED, Examples) {
    const RationalEllipticModel& M = model();
    const IntVec zero(10, 0);
    EXPECT_EQ(normalize_E_D(1, 0, zero, M), (GammaVector{1, zero, 1}));
    GammaVector g = normalize_E_D(1, 1, zero, M);
    EXPECT_EQ(g.r, 1);
    EXPECT_EQ(chi_pair_gamma(g, g, M.surface), 1);
    EXPECT_EQ(M.pair(g.c1, M.f), 1);
    EXPECT_THROW(normalize_E_D(2, 2, zero, M), PreconditionError);
    EXPECT_THROW(normalize_E_D(0, 1, zero, M), PreconditionError);
    EXPECT_THROW(normalize_E_D(1, 0, M.f, M), PreconditionError);
    EXPECT_THROW(normalize_E_D(1, 0, M.sigma, M), PreconditionError);
}

TEST(NormalizeED, SelfChiIsOneAndTwistIsUnique) {
    const RationalEllipticModel& M = model();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> c(-2, 2), rr(1, 6), dd(-7, 7);
    for (int t = 0; t < 200; ++t) {
        const Int r = rr(rng);
        Int d = dd(rng);
        while (std::gcd(r, d) != 1) d = dd(rng);
        IntVec lambda(8);
        for (auto& x : lambda) x = c(rng);
        const IntVec D = M.embed(lambda);
        GammaVector g = normalize_E_D(r, d, D, M);
        ASSERT_EQ(chi_pair_gamma(g, g, M.surface), 1);
        auto o = oracle_e_d(r, d, D);
        ASSERT_TRUE(o);
        EXPECT_EQ(g, *o);
        // twisting by n f on E_D shifts the class by (0, n r f, n d)
        for (Int n = -2; n <= 2; ++n) {
            GammaVector tw{r, axpy(g.c1, n * r, M.f), g.chi + n * d};
            EXPECT_EQ(chi_pair_gamma(tw, tw, M.surface), 1);
        }
    }
}

TEST(NormalizeED, IntegralTwistsFormOneResidueClass) {
    const RationalEllipticModel& M = model();
    for (Int r = 1; r <= 7; ++r)
        for (Int d = -6; d <= 6; ++d) {
            if (std::gcd(r, d) != 1) continue;
            const IntVec D(10, 0);
            std::vector<Int> ks;
            for (Int k = 0; k < 3 * r; ++k)
                if (e_d_class(r, d, D, k, M)) ks.push_back(k);
            ASSERT_EQ(ks.size(), 3u) << r << " " << d;
            EXPECT_EQ(ks[1] - ks[0], r);
            EXPECT_EQ(ks[2] - ks[1], r);
        }
}

TEST(TorsionFree, EDItselfIsNotApplicable) {
    const RationalEllipticModel& M = model();
    GammaVector E = normalize_E_D(2, 1, IntVec(10, 0), M);
    TorsionFreeResult r = exists_torsionfree(E, 2, 1, M);
    EXPECT_EQ(r.verdict, Verdict::NotApplicable);
    EXPECT_EQ(r.self_chi, 1);
}

TEST(TorsionFree, Preconditions) {
    const RationalEllipticModel& M = model();
    GammaVector F{1, M.sigma, 0};
    EXPECT_THROW(exists_torsionfree(F, 1, 1, M, false), PreconditionError);
    EXPECT_THROW(exists_torsionfree(F, 2, 1, M), PreconditionError);  // rank not a multiple
    EXPECT_THROW(exists_torsionfree(F, 1, 0, M), PreconditionError);  // (c1, f) != l d
    EXPECT_THROW(exists_torsionfree(GammaVector{2, scale(2, M.sigma), 2}, 2, 1, M), PreconditionError);
    EXPECT_THROW(exists_torsionfree(F, 2, 2, M), PreconditionError);
}

TEST(TorsionFree, RankOneIdealSheavesExist) {
    // F = L (x) I_Z with len Z = n >= 1 has chi(F, F) = 1 - 2n and chi(E_D, F) <= 1 - n
    const RationalEllipticModel& M = model();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Int> c(-2, 2), len(1, 3);
    for (int t = 0; t < 20; ++t) {
        IntVec lambda(8);
        for (auto& x : lambda) x = c(rng);
        const Int k = c(rng);
        GammaVector L = *oracle_e_d(1, 1, M.embed(lambda));
        L.c1 = axpy(L.c1, k, M.f);
        L.chi += k;
        const Int n = len(rng);
        GammaVector F{1, L.c1, L.chi - n};
        TorsionFreeResult r = exists_torsionfree(F, 1, 1, M);
        EXPECT_EQ(r.self_chi, 1 - 2 * n);
        EXPECT_EQ(r.verdict, Verdict::Exists);
        EXPECT_FALSE(r.mu_stable_locally_free);
    }
}

TEST(TorsionFree, FiberDegreeOneAlwaysExists) {
    // E8 is unimodular, so some E_D matches the E8 part of c1(F) and then
    // chi(F, F) = 2 chi(E_D, F) - 1 at the maximizer
    const RationalEllipticModel& M = model();
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<Int> c(-2, 2), chis(-10, 3), rr(1, 3);
    std::size_t checked = 0;
    for (int t = 0; t < 300; ++t) {
        const Int r = rr(rng), d = 1;
        IntVec xi(8);
        for (auto& x : xi) x = c(rng);
        GammaVector F{r, axpy(axpy(M.embed(xi), d, M.sigma), c(rng), M.f), chis(rng)};
        if (gcd_of(gamma_coords(F)) != 1 || chi_pair_gamma(F, F, M.surface) > 0) continue;
        ++checked;
        EXPECT_EQ(exists_torsionfree(F, r, d, M).verdict, Verdict::Exists) << to_string(gamma_coords(F));
    }
    EXPECT_GT(checked, 50u);
}

TEST(TorsionFree, EmptyWhenEZeroPairsPositively) {
    const RationalEllipticModel& M = model();
    const Int r = 1, d = 1, l = 2;
    GammaVector E0 = normalize_E_D(r, d, IntVec(10, 0), M);
    std::size_t found = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (Int sign : {-1, 0, 1})
            for (Int a = -4; a <= 4; ++a)
                for (Int chi = -8; chi <= 8; ++chi) {
                    GammaVector F{l * r, axpy(axpy(scale(l * d, M.sigma), a, M.f), sign, M.e8[i]), chi};
                    if (gcd_of(gamma_coords(F)) != 1) continue;
                    if (chi_pair_gamma(F, F, M.surface) > 0 || chi_pair_gamma(E0, F, M.surface) != 1) continue;
                    ++found;
                    TorsionFreeResult res = exists_torsionfree(F, r, d, M);
                    ASSERT_EQ(res.verdict, Verdict::Empty);
                    EXPECT_GE(*res.witness_chi, 1);
                    EXPECT_EQ(chi_pair_gamma(*res.witness, F, M.surface), *res.witness_chi);
                    EXPECT_EQ(*res.witness, normalize_E_D(r, d, M.embed(*res.witness_D), M));
                }
    EXPECT_GT(found, 0u);
}

TEST(TorsionFree, MatchesBoxOracle) {
    const RationalEllipticModel& M = model();
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<Int> c(-1, 1), shift(-3, 3), chis(-8, 4);
    std::size_t exists = 0, empty = 0;
    for (int t = 0; t < 12; ++t) {
        const Int r = t % 2 == 0 ? 1 : 2, d = 1, l = 1 + t % 3 / 2;
        if (std::gcd(l * r, l * d) != l) continue;
        IntVec xi(8);
        for (auto& x : xi) x = c(rng);
        IntVec c1 = axpy(axpy(M.embed(xi), l * d, M.sigma), shift(rng), M.f);
        GammaVector F{l * r, c1, chis(rng)};
        if (gcd_of(gamma_coords(F)) != 1 || chi_pair_gamma(F, F, M.surface) > 0) continue;
        TorsionFreeResult res = exists_torsionfree(F, r, d, M);
        const Int best = oracle_max_chi(F, r, d, 2);
        if (best > 0) {
            ASSERT_EQ(res.verdict, Verdict::Empty);
        }
        if (res.verdict == Verdict::Empty) {
            ++empty;
            EXPECT_GE(*res.witness_chi, best);
            EXPECT_EQ(chi_pair_gamma(*res.witness, F, M.surface), *res.witness_chi);
            Int inf = 0;
            for (Int x : *res.witness_D) inf = std::max(inf, x < 0 ? -x : x);
            if (inf <= 2) { EXPECT_EQ(*res.witness_chi, best); }
        } else {
            ++exists;
            EXPECT_LE(best, 0);
            EXPECT_EQ(res.mu_stable_locally_free, F.r > 1);
        }
    }
    EXPECT_GT(exists + empty, 4u);
}

TEST(LexSlope, KeysDecideInOrder) {
    const RationalEllipticModel& M = model();
    const auto& ns = M.surface.ns;
    const IntVec L = M.surface.named("H");
    const IntVec eps = basis(0);
    const IntVec base = axpy(M.sigma, 2, M.f);
    // first key
    SlopeDatum a{base, 1}, b{base, 2};
    EXPECT_TRUE(lex_slope_less(a, b, M.f, L, eps, ns));
    EXPECT_FALSE(lex_slope_less(b, a, M.f, L, eps, ns));
    // equal on f and L, separated by eps
    SlopeDatum F{base, 1};
    SlopeDatum E{add(scale(2, base), M.e8[1]), 2};
    ASSERT_EQ(ns.pair(E.c1, M.f), 2 * ns.pair(F.c1, M.f));
    ASSERT_EQ(ns.pair(E.c1, L), 2 * ns.pair(F.c1, L));
    ASSERT_EQ(ns.pair(E.c1, eps), 2 * ns.pair(F.c1, eps) + 1);
    EXPECT_TRUE(lex_slope_less(E, F, M.f, L, eps, ns));
    EXPECT_FALSE(lex_slope_less(F, E, M.f, L, eps, ns));
    // the second key wins over the third
    SlopeDatum G{axpy(scale(2, base), 1, M.f), 2};
    EXPECT_TRUE(lex_slope_less(G, F, M.f, L, eps, ns));
}

TEST(LexSlope, RejectsNonPositiveDegrees) {
    const RationalEllipticModel& M = model();
    const auto& ns = M.surface.ns;
    const IntVec L = M.surface.named("H");
    SlopeDatum good{axpy(M.sigma, 2, M.f), 1};
    SlopeDatum fiber{M.f, 1};
    EXPECT_THROW(lex_slope_less(good, fiber, M.f, L, basis(0), ns), PreconditionError);
    SlopeDatum negative{scale(-1, good.c1), 1};
    EXPECT_THROW(lex_slope_less(negative, good, M.f, L, basis(0), ns), PreconditionError);
}

TEST(LexSlope, StrictPartialOrderOnSamples) {
    const RationalEllipticModel& M = model();
    const auto& ns = M.surface.ns;
    const IntVec L = M.surface.named("H");
    const IntVec eps = basis(0);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Int> rk(1, 3), nf(0, 4), c(-1, 1), chi(-5, 5);
    std::vector<SlopeDatum> data;
    while (data.size() < 40) {
        IntVec xi(8);
        for (auto& x : xi) x = c(rng);
        IntVec c1 = axpy(axpy(M.embed(xi), rk(rng), M.sigma), nf(rng) + 3, M.f);
        if (ns.pair(c1, M.f) <= 0 || ns.pair(c1, L) <= 0 || ns.pair(c1, eps) <= 0) continue;
        data.push_back({c1, chi(rng)});
    }
    auto less = [&](const SlopeDatum& x, const SlopeDatum& y) { return lex_slope_less(x, y, M.f, L, eps, ns); };
    for (const auto& x : data) {
        EXPECT_FALSE(less(x, x));
        for (const auto& y : data) {
            if (less(x, y)) { EXPECT_FALSE(less(y, x)); }
            if (!less(x, y) && !less(y, x)) {
                // incomparable means all three slopes agree
                for (const IntVec* key : {&M.f, &L, &eps})
                    EXPECT_EQ(x.chi_G * ns.pair(y.c1, *key), y.chi_G * ns.pair(x.c1, *key));
            }
            for (const auto& z : data) {
                if (less(x, y) && less(y, z)) { EXPECT_TRUE(less(x, z)); }
            }
        }
    }
}
