// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mukai/models.hpp"
#include "mukai/root_config.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace mukai;

namespace {

// Configuration of the basis vectors of a lattice with the given Gram matrix.
RootConfiguration basis_config(const IntMatrix& gram) {
    SurfaceModel X;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gram.rows(); ++i) names.push_back("b" + std::to_string(i));
    X.ns = IntersectionLattice(gram, names);
    X.canonical = IntVec(gram.rows(), 0);
    std::vector<IntVec> vs;
    for (std::size_t i = 0; i < gram.rows(); ++i) vs.push_back(X.ns.basis_vector(names[i]));
    return build_configuration(vs, Ambient::of(VectorKind::Curve, X));
}

IntMatrix negated(const IntMatrix& c) {
    IntMatrix g(c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) g(i, j) = -c(i, j);
    return g;
}

IntMatrix permuted(const IntMatrix& c, const std::vector<std::size_t>& p) {
    IntMatrix g(c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) g(i, j) = c(p[i], p[j]);
    return g;
}

RootConfiguration rdp_config(const std::string& type) { return build_configuration(rdp_germ(type)); }


}  // namespace

// ---------------------------------------------------------------------------
// classification

TEST(BuildConfiguration, TwoCurvesMeetingOnceIsA2) {
    RootConfiguration S = basis_config(IntMatrix::from_rows({{-2, 1}, {1, -2}}));
    EXPECT_EQ(S.kind, ConfigKind::Finite);
    EXPECT_EQ(S.kind_string(), "Finite(A2)");
    EXPECT_EQ(S.cartan, IntMatrix::from_rows({{2, -1}, {-1, 2}}));
}

TEST(BuildConfiguration, ThreeCycleIsAffineA2) {
    RootConfiguration S = basis_config(IntMatrix::from_rows({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
    EXPECT_EQ(S.kind, ConfigKind::Affine);
    EXPECT_EQ(S.kind_string(), "Affine(A2^(1))");
    EXPECT_EQ(S.marks, (IntVec{1, 1, 1}));
}

TEST(BuildConfiguration, RationalEllipticFiberIsAffineE8) {
    RootConfiguration S = build_configuration(rational_elliptic_e8());
    EXPECT_EQ(S.kind_string(), "Affine(E8^(1))");
    EXPECT_EQ(height(S.marks), 30);
    EXPECT_TRUE(is_zero(mat_vec(S.cartan, S.marks)));
    EXPECT_EQ(S.delta, rational_elliptic_e8().surface.named("f"));
}

TEST(BuildConfiguration, DoubleEdgeIsAffineA1) {
    RootConfiguration S = basis_config(IntMatrix::from_rows({{-2, 2}, {2, -2}}));
    EXPECT_EQ(S.kind_string(), "Affine(A1^(1))");
    EXPECT_EQ(S.marks, (IntVec{1, 1}));
}

TEST(BuildConfiguration, DisconnectedAndIndefinite) {
    EXPECT_EQ(basis_config(IntMatrix::from_rows({{-2, 0}, {0, -2}})).kind_string(), "Finite(A1+A1)");
    RootConfiguration tri = basis_config(IntMatrix::from_rows({{-2, 2, 2}, {2, -2, 2}, {2, 2, -2}}));
    EXPECT_EQ(tri.kind, ConfigKind::Indefinite);
    // affine plus an isolated node: semidefinite, kernel of dimension one, not affine
    RootConfiguration mixed = basis_config(IntMatrix::from_rows({{-2, 2, 0}, {2, -2, 0}, {0, 0, -2}}));
    EXPECT_EQ(mixed.kind, ConfigKind::Indefinite);
}

TEST(BuildConfiguration, RejectsBadVectors) {
    EXPECT_THROW(basis_config(IntMatrix::from_rows({{-4}})), PreconditionError);
    SurfaceModel X = rdp_germ("A2").surface;
    Ambient amb = Ambient::of(VectorKind::Curve, X);
    EXPECT_THROW(build_configuration({IntVec{1, 0}, IntVec{0, -1}}, amb), PreconditionError);
}

TEST(BuildConfiguration, AdeLabelsAreGraphInvariant) {
    std::mt19937_64 rng(17);
    for (const char* t : {"A1", "A3", "A5", "D4", "D5", "D7", "E6", "E7", "E8"}) {
        IntMatrix c = finite_cartan(t);
        std::vector<std::size_t> p(c.rows());
        std::iota(p.begin(), p.end(), 0);
        for (int k = 0; k < 4; ++k) {
            std::shuffle(p.begin(), p.end(), rng);
            RootConfiguration S = basis_config(negated(permuted(c, p)));
            EXPECT_EQ(S.kind_string(), std::string("Finite(") + t + ")");
        }
        IntMatrix a = affine_extension(c).cartan;
        std::vector<std::size_t> q(a.rows());
        std::iota(q.begin(), q.end(), 0);
        std::shuffle(q.begin(), q.end(), rng);
        RootConfiguration S = basis_config(negated(permuted(a, q)));
        EXPECT_EQ(S.kind_string(), std::string("Affine(") + t + "^(1))");
        EXPECT_EQ(S.marks[S.zero_node], 1);
    }
}

TEST(BuildConfiguration, BuiltinModelsClassify) {
    EXPECT_EQ(build_configuration(builtin_model("k3-example1")).kind_string(), "Affine(A2^(1))");
    EXPECT_EQ(build_configuration(builtin_model("k3-example1:E8,r=2,a=1")).kind_string(), "Finite(E8)");
    EXPECT_EQ(build_configuration(builtin_model("k3-elliptic")).kind_string(), "Affine(E8^(1))");
    EXPECT_EQ(build_configuration(builtin_model("rdp-germ-D5")).kind_string(), "Finite(D5)");
}

TEST(AffineInvariants, MarksAndDelta) {
    for (const char* name : {"k3-example1:A4affine,r=2,a=1", "k3-example1:D5affine,r=1,a=2", "k3-elliptic",
                             "rational-elliptic-e8"}) {
        RootConfiguration S = build_configuration(builtin_model(name));
        ASSERT_EQ(S.kind, ConfigKind::Affine) << name;
        EXPECT_TRUE(is_zero(mat_vec(S.cartan, S.marks))) << name;
        EXPECT_EQ(gcd_of(S.marks), 1) << name;
        EXPECT_EQ(S.delta, S.combine(S.marks)) << name;
        EXPECT_EQ(S.pair(S.delta, S.delta), 0) << name;
        for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(reflect(i, S.delta, S), S.delta) << name;
    }
}

// ---------------------------------------------------------------------------
// the K3 lattice model

TEST(K3ExampleOne, CartanDeltaAndDegrees) {
    for (const char* type : {"A1", "A2", "A4", "D4", "D6", "E6", "E7", "E8"}) {
        const Int r = 2, a = 1;
        ModelSpec spec = k3_example1(std::string(type) + "affine", r, a);
        RootConfiguration S = build_configuration(spec);
        AffineData aff = affine_extension(finite_cartan(type));
        EXPECT_EQ(S.cartan, aff.cartan) << type;
        EXPECT_EQ(S.pair(S.delta, S.delta), 0) << type;
        const IntVec& H = *spec.polarization;
        for (std::size_t i = 0; i < S.size(); ++i) {
            MukaiVector v = S.ambient.to_mukai(S.vectors[i]);
            EXPECT_EQ(spec.surface.ns.pair(v.c1, H), 2 * r * a * height(aff.marks)) << type;
        }
    }
}

TEST(K3ExampleOne, LatticeIsEvenWithOnePositiveDirection) {
    for (Int r : {1, 2, 3})
        for (Int a : {1, 2}) {
            ModelSpec spec = k3_example1("D4affine", r, a);
            const IntMatrix& g = spec.surface.ns.gram();
            for (std::size_t i = 0; i < g.rows(); ++i) EXPECT_EQ(g(i, i) % 2, 0);
            EXPECT_GT(spec.surface.ns.square(*spec.polarization), 0);
        }
}

// ---------------------------------------------------------------------------
// reflections

TEST(Reflect, SimpleExamples) {
    RootConfiguration S = rdp_config("A3");
    for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(reflect(i, S.vectors[i], S), scale(-1, S.vectors[i]));
    // v1 and v3 are orthogonal
    EXPECT_EQ(reflect(0, S.vectors[2], S), S.vectors[2]);
    EXPECT_THROW(reflect(3, S.vectors[0], S), std::out_of_range);
}

TEST(ReflectProperty, InvolutiveAndIsometric) {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<Int> d(-4, 4);
    for (const char* name : {"k3-example1:D4affine,r=2,a=1", "rdp-germ-E6", "rational-elliptic-e8"}) {
        RootConfiguration S = build_configuration(builtin_model(name));
        std::uniform_int_distribution<std::size_t> idx(0, S.size() - 1);
        for (int t = 0; t < 100; ++t) {
            IntVec x(S.ambient.dim()), y(S.ambient.dim());
            for (auto& c : x) c = d(rng);
            for (auto& c : y) c = d(rng);
            const std::size_t i = idx(rng);
            EXPECT_EQ(reflect(i, reflect(i, x, S), S), x);
            EXPECT_EQ(S.pair(reflect(i, x, S), reflect(i, y, S)), S.pair(x, y));
        }
    }
}

TEST(Reflect, RdpWalkReachesPointPlusSimpleRoot) {
    // rho + sum n_i v_i with (sum n_i v_i)^2 = -2 is carried to rho + v_j
    for (const char* type : {"A3", "D4", "E6"}) {
        RootConfiguration S = rdp_config(type);
        RootSystem rs = root_system(finite_cartan(type));
        for (const IntVec& n : rs.positive) {
            IntVec x = S.combine(n);
            x.back() = 1;  // the point class
            for (int guard = 0; guard < 100; ++guard) {
                bool simple = false;
                for (std::size_t j = 0; j < S.size(); ++j) {
                    IntVec target = S.vectors[j];
                    target.back() = 1;
                    simple = simple || x == target;
                }
                if (simple) break;
                std::size_t i = 0;
                while (i < S.size() && S.pair(x, S.vectors[i]) >= 0) ++i;
                ASSERT_LT(i, S.size()) << type;
                x = reflect(i, x, S);
            }
            EXPECT_EQ(x.back(), 1);
            EXPECT_EQ(height(S.ambient.c1_of(x)), 1) << type << " " << to_string(n);
        }
    }
}

// ---------------------------------------------------------------------------
// dominant reduction and orbits

TEST(ReduceToDominant, Examples) {
    RootConfiguration S = rdp_config("A2");
    const IntVec theta = S.combine({1, 1});  // pairs to (-1, -1)
    Reduction r0 = reduce_to_dominant(theta, S);
    EXPECT_EQ(r0.representative, theta);
    EXPECT_TRUE(r0.word.empty());
    Reduction r1 = reduce_to_dominant(S.vectors[0], S);
    EXPECT_EQ(r1.word, (std::vector<std::size_t>{1}));
    EXPECT_EQ(r1.representative, theta);
    Reduction r2 = reduce_to_dominant(scale(-1, S.vectors[0]), S);
    EXPECT_EQ(r2.word, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r2.representative, theta);
}

TEST(ReduceToDominant, WordReproducesRepresentative) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<Int> d(-3, 3);
    for (const char* type : {"A3", "D5", "E7"}) {
        RootConfiguration S = rdp_config(type);
        for (int t = 0; t < 50; ++t) {
            IntVec x(S.ambient.dim());
            for (auto& c : x) c = d(rng);
            Reduction red = reduce_to_dominant(x, S);
            EXPECT_TRUE(is_dominant(red.representative, S));
            EXPECT_EQ(apply_word(red.word, x, S), red.representative);
        }
    }
}

TEST(ReduceToDominantProperty, UniqueRepresentativeInA3Orbits) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<Int> d(-3, 3);
    RootConfiguration S = rdp_config("A3");
    for (int t = 0; t < 40; ++t) {
        IntVec x(S.ambient.dim());
        for (auto& c : x) c = d(rng);
        std::vector<IntVec> orbit = weyl_orbit(x, S);
        EXPECT_LE(orbit.size(), 24u);
        std::vector<IntVec> dominant;
        for (const IntVec& y : orbit)
            if (is_dominant(y, S)) dominant.push_back(y);
        ASSERT_EQ(dominant.size(), 1u) << to_string(x);
        for (const IntVec& y : orbit) EXPECT_EQ(reduce_to_dominant(y, S).representative, dominant[0]);
    }
}

TEST(ReduceToDominant, AffineGuards) {
    RootConfiguration S = build_configuration(builtin_model("k3-example1"));
    // (0, 0, -1) pairs with delta to 3 and with each v_i to 1
    EXPECT_THROW(reduce_to_dominant(IntVec{0, 0, 0, 0, -1}, S), PreconditionError);
    // orthogonal to delta, pairs (-2, 1, 1) with the roots
    EXPECT_THROW(reduce_to_dominant(IntVec{1, 1, 0, 0, 1}, S), PreconditionError);
    // pairs (-6, 3, 0) with the roots and -3 with delta
    const IntVec x{1, 2, -1, 0, 2};
    EXPECT_EQ(S.pair(x, S.delta), -3);
    Reduction red = reduce_to_dominant(x, S);
    EXPECT_FALSE(red.word.empty());
    EXPECT_TRUE(is_dominant(red.representative, S));
    EXPECT_EQ(apply_word(red.word, x, S), red.representative);
}

TEST(WeylOrbit, RootsOfA2AndLimit) {
    RootConfiguration S = rdp_config("A2");
    EXPECT_EQ(weyl_orbit(S.vectors[0], S).size(), 6u);
    RootConfiguration E = build_configuration(builtin_model("k3-example1"));
    EXPECT_THROW(weyl_orbit(E.vectors[0], E, 500), PreconditionError);
}

// ---------------------------------------------------------------------------
// B_(xi, d)

TEST(EnumerateB, A1Examples) {
    RootConfiguration S = rdp_config("A1");
    EXPECT_EQ(enumerate_B(IntVec{0, 0}, 0, S), (std::vector<IntVec>{{0}}));
    EXPECT_EQ(enumerate_B(IntVec{0, 0}, 2, S), (std::vector<IntVec>{{-1}, {0}, {1}}));
    EXPECT_TRUE(enumerate_B(IntVec{0, 0}, -1, S).empty());
}

TEST(EnumerateB, A2AgainstBoxTen) {
    RootConfiguration S = rdp_config("A2");
    const IntVec xi = S.vectors[0];
    std::vector<IntVec> box = oracle::box_search(2, 10, [&](const IntVec& x) {
        const IntVec v = S.combine(x);
        return S.pair(v, v) - 2 * S.pair(xi, v) + 2 >= 0;
    });
    EXPECT_EQ(enumerate_B(xi, 2, S), box);
}

TEST(EnumerateBProperty, RandomA3AndD4AgainstBoxSearch) {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<Int> coeff(-2, 2), dd(-2, 8), chi(-3, 3);
    for (const char* type : {"A3", "D4"}) {
        RootConfiguration S = rdp_config(type);
        for (int t = 0; t < 25; ++t) {
            IntVec c(S.size());
            for (auto& x : c) x = coeff(rng);
            IntVec xi = S.combine(c);
            xi.back() = chi(rng);  // the chi coordinate does not enter the pairing
            const Int d = dd(rng);
            EXPECT_EQ(enumerate_B(xi, d, S), oracle::b_set_oracle(c, d, S)) << type << " xi=" << to_string(c) << " d=" << d;
        }
    }
}

TEST(EnumerateBProperty, CentrallySymmetricForZeroXi) {
    for (const char* type : {"A3", "D4", "E6"}) {
        RootConfiguration S = rdp_config(type);
        for (Int d : {0, 2, 4, 6}) {
            std::vector<IntVec> B = enumerate_B(IntVec(S.ambient.dim(), 0), d, S);
            std::vector<IntVec> neg;
            for (const IntVec& x : B) neg.push_back(scale(-1, x));
            std::sort(neg.begin(), neg.end());
            EXPECT_EQ(B, neg);
        }
    }
}

TEST(EnumerateB, RequiresFiniteConfiguration) {
    RootConfiguration S = build_configuration(builtin_model("k3-elliptic"));
    EXPECT_THROW(enumerate_B(IntVec(S.ambient.dim(), 0), 0, S), PreconditionError);
}

// ---------------------------------------------------------------------------
// guarantees

TEST(DivisionGuarantee, Examples) {
    RootConfiguration F = rdp_config("A2");
    EXPECT_EQ(division_guarantee(F, IntVec{3, -1, 5}), Guarantee::Guaranteed);
    RootConfiguration S = build_configuration(builtin_model("k3-example1"));
    EXPECT_EQ(S.pair(IntVec{0, 0, 0, 0, -1}, S.delta), 3);
    EXPECT_EQ(division_guarantee(S, IntVec{0, 0, 0, 0, -1}), Guarantee::OneSidedDivision);
    EXPECT_EQ(division_guarantee(S, IntVec{0, 0, 0, 0, 1}), Guarantee::OneSidedExtension);
    EXPECT_EQ(division_guarantee(S, IntVec{1, 0, 0, 0, -1}), Guarantee::NotGuaranteed);
    EXPECT_EQ(to_string(Guarantee::OneSidedDivision), "GuaranteedOneSided(division)");
}

TEST(DivisionGuarantee, DivisionSideWalkDecreasesSquare) {
    // subtracting roots v with <x, v> > 0 lowers <x^2> by 2<x, v> + 2 >= 4 each step
    RootConfiguration S = build_configuration(builtin_model("k3-example1"));
    IntVec x{0, 0, 0, 0, -1};
    Int prev = S.pair(x, x);
    for (int s = 0; s < 12; ++s) {
        std::size_t i = 0;
        while (i < S.size() && S.pair(x, S.vectors[i]) <= 0) ++i;
        ASSERT_LT(i, S.size());
        x = sub(x, S.vectors[i]);
        const Int now = S.pair(x, x);
        EXPECT_LT(now, prev);
        prev = now;
        EXPECT_EQ(S.pair(x, S.delta), 3);
    }
}
