// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file models.hpp
 * @brief Built-in surface models addressable by name.
 *
 *   k3-example1[:TYPE][,r=R][,a=A]
 *       K3 lattice spanned by xi_0..xi_n with (xi_i, xi_j) = -a_ij + 2ra for the
 *       affine Cartan matrix (a_ij) of TYPE. Roots v_i = (r, xi_i, a). A
 *       finite TYPE such as "A2" keeps the affine lattice but uses only
 *       v_1..v_n; "A2affine" (or "A2^1") uses v_0..v_n. Default A2^(1), r=a=1.
 *   k3-elliptic
 *       U + E8(-1) with section sigma, fiber f and fiber components C0..C8;
 *       roots v(O_{C_i}(-1)) = (0, C_i, 0).
 *   rational-elliptic-e8
 *       Pic = Zh + Ze1..Ze9, sigma = e9, f = -K, roots the E8^(1) fiber curves.
 *   rdp-germ-TYPE
 *       Exceptional curves of a rational double point, NS = -Cartan, roots
 *       (C_i, chi = 0).
 */

#pragma once

#include "mukai/cartan.hpp"
#include "mukai/config.hpp"

#include <filesystem>

namespace mukai {

namespace models_detail {

inline std::vector<std::string> numbered(const std::string& stem, std::size_t from, std::size_t to) {
    std::vector<std::string> out;
    for (std::size_t i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

// E8 simple roots C1..C8 in Bourbaki order inside (h, e1..e9).
inline std::vector<IntVec> e8_simple_roots_in_pic() {
    auto e = [](std::size_t i) {
        IntVec v(10, 0);
        v[i] = 1;
        return v;
    };
    const IntVec h = e(0);
    std::vector<IntVec> c(8);
    c[0] = sub(e(1), e(2));                       // e1 - e2
    c[1] = sub(sub(sub(h, e(1)), e(2)), e(3));    // h - e1 - e2 - e3
    for (std::size_t i = 2; i < 8; ++i) c[i] = sub(e(i), e(i + 1));  // e2-e3 .. e7-e8
    return c;
}

}  // namespace models_detail

inline ModelSpec k3_example1(const std::string& type, Int r, Int a) {
    CartanType t = parse_cartan_type(type);
    const bool use_all = t.affine;
    t.affine = true;
    AffineData aff = affine_extension(finite_cartan(t));
    const std::size_t n = aff.cartan.rows();
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = checked_add(-aff.cartan(i, j), checked_mul(2, checked_mul(r, a)));

    ModelSpec spec;
    SurfaceModel& X = spec.surface;
    X.name = "k3-example1:" + (use_all ? t.finite_label() + "affine" : t.finite_label()) + ",r=" +
             std::to_string(r) + ",a=" + std::to_string(a);
    X.ns = IntersectionLattice(gram, models_detail::numbered("xi", 0, n - 1));
    X.canonical = IntVec(n, 0);
    X.pg = 1;
    X.q = 0;
    X.chi_O = 2;
    X.k_trivial = true;
    IntVec H = aff.marks;
    X.named_classes["H"] = H;
    X.validate();

    spec.root_kind = VectorKind::Mukai;
    Ambient amb = spec.ambient();
    for (std::size_t i = use_all ? 0 : 1; i < n; ++i) {
        IntVec xi(n, 0);
        xi[i] = 1;
        spec.root_names.push_back("v" + std::to_string(i));
        spec.roots.push_back(amb.from(MukaiVector{r, xi, checked_mul(2, a)}));
    }
    const Int total = height(aff.marks);
    spec.polarization = H;
    // G = sum a_i E_i: v(G) = (r sum a, H, a sum a), chi(G) = a(G) + rk(G)
    spec.twist = TwistData(checked_mul(r, total), H, checked_mul(checked_add(a, r), total));
    return spec;
}

inline ModelSpec k3_elliptic() {
    const IntMatrix e8 = finite_cartan(CartanType{'E', 8, false});
    const std::size_t n = 10;
    IntMatrix gram(n, n);
    gram(0, 0) = -2;
    gram(0, 1) = gram(1, 0) = 1;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) gram(i + 2, j + 2) = -e8(i, j);
    std::vector<std::string> names{"sigma", "f"};
    for (const auto& c : models_detail::numbered("C", 1, 8)) names.push_back(c);

    ModelSpec spec;
    SurfaceModel& X = spec.surface;
    X.name = "k3-elliptic";
    X.ns = IntersectionLattice(gram, names);
    X.canonical = IntVec(n, 0);
    X.pg = 1;
    X.q = 0;
    X.chi_O = 2;
    X.k_trivial = true;
    AffineData aff = affine_extension(e8);
    IntVec c0(n, 0);
    c0[1] = 1;
    for (std::size_t i = 0; i < 8; ++i) c0[i + 2] = -aff.theta[i];
    X.named_classes["C0"] = c0;
    IntVec H(n, 0);
    H[0] = 1;
    H[1] = 3;
    X.named_classes["H"] = H;
    X.validate();

    spec.root_kind = VectorKind::Mukai;
    Ambient amb = spec.ambient();
    for (std::size_t i = 0; i <= 8; ++i) {
        std::string cn = "C" + std::to_string(i);
        spec.root_names.push_back(cn);
        spec.roots.push_back(amb.from(MukaiVector{0, X.named(cn), 0}));
    }
    spec.polarization = H;
    return spec;
}

inline ModelSpec rational_elliptic_e8() {
    const std::size_t n = 10;
    IntMatrix gram(n, n);
    gram(0, 0) = 1;
    for (std::size_t i = 1; i < n; ++i) gram(i, i) = -1;
    std::vector<std::string> names{"h"};
    for (const auto& e : models_detail::numbered("e", 1, 9)) names.push_back(e);

    ModelSpec spec;
    SurfaceModel& X = spec.surface;
    X.name = "rational-elliptic-e8";
    X.ns = IntersectionLattice(gram, names);
    IntVec K(n, 1);
    K[0] = -3;
    X.canonical = K;
    X.pg = 0;
    X.q = 0;
    X.chi_O = 1;
    X.k_trivial = false;
    X.named_classes["K"] = K;
    X.named_classes["f"] = scale(-1, K);
    IntVec sigma(n, 0);
    sigma[9] = 1;
    X.named_classes["sigma"] = sigma;
    std::vector<IntVec> c = models_detail::e8_simple_roots_in_pic();
    AffineData aff = affine_extension(finite_cartan(CartanType{'E', 8, false}));
    IntVec c0 = scale(-1, K);
    for (std::size_t i = 0; i < 8; ++i) {
        X.named_classes["C" + std::to_string(i + 1)] = c[i];
        c0 = axpy(c0, -aff.theta[i], c[i]);
    }
    X.named_classes["C0"] = c0;
    IntVec H = axpy(sigma, 3, scale(-1, K));
    X.named_classes["H"] = H;
    X.validate();

    spec.root_kind = VectorKind::Curve;
    for (std::size_t i = 0; i <= 8; ++i) {
        std::string cn = "C" + std::to_string(i);
        spec.root_names.push_back(cn);
        spec.roots.push_back(X.named(cn));
    }
    spec.polarization = H;
    return spec;
}

inline ModelSpec rdp_germ(const std::string& type) {
    CartanType t = parse_cartan_type(type);
    if (t.affine) throw PreconditionError("rational double points have finite type");
    IntMatrix c = finite_cartan(t);
    const std::size_t n = c.rows();
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = -c(i, j);

    ModelSpec spec;
    SurfaceModel& X = spec.surface;
    X.name = "rdp-germ-" + t.finite_label();
    X.ns = IntersectionLattice(gram, models_detail::numbered("C", 1, n));
    X.canonical = IntVec(n, 0);
    X.pg = 1;
    X.q = 0;
    X.chi_O = 2;
    X.k_trivial = true;
    X.validate();

    spec.root_kind = VectorKind::Rank0;
    Ambient amb = spec.ambient();
    for (std::size_t i = 0; i < n; ++i) {
        spec.root_names.push_back("C" + std::to_string(i + 1));
        IntVec e(n, 0);
        e[i] = 1;
        spec.roots.push_back(amb.from(OneDimClass{e, 0}));
    }
    return spec;
}

inline std::vector<std::string> builtin_model_names() {
    return {"k3-example1", "k3-elliptic", "rational-elliptic-e8", "rdp-germ-<type>"};
}

/// Resolves a built-in model name; throws ConfigError for unknown names.
inline ModelSpec builtin_model(const std::string& name) {
    try {
        if (name == "k3-elliptic") return k3_elliptic();
        if (name == "rational-elliptic-e8") return rational_elliptic_e8();
        if (name.rfind("rdp-germ-", 0) == 0) return rdp_germ(name.substr(9));
        if (name == "k3-example1" || name.rfind("k3-example1:", 0) == 0) {
            std::string type = "A2affine";
            Int r = 1, a = 1;
            if (name.size() > 12) {
                auto parts = config_detail::split(name.substr(12), ',');
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    const std::string& p = parts[i];
                    auto eq = p.find('=');
                    if (eq == std::string::npos) {
                        if (i != 0) throw PreconditionError("unexpected parameter '" + p + "'");
                        type = p;
                        continue;
                    }
                    std::string k = p.substr(0, eq);
                    auto v = config_detail::parse_int(p.substr(eq + 1));
                    if (!v) throw PreconditionError("parameter '" + k + "' must be an integer");
                    if (k == "r") r = *v;
                    else if (k == "a") a = *v;
                    else if (k == "type") type = p.substr(eq + 1);
                    else throw PreconditionError("unknown parameter '" + k + "'");
                }
            }
            if (r <= 0) throw PreconditionError("r must be positive");
            return k3_example1(type, r, a);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(0, "model", e.what());
    }
    throw ConfigError(0, "model", "unknown model '" + name + "'");
}

/// A path to an existing model file, or a built-in name.
inline ModelSpec resolve_model(const std::string& name_or_path) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(name_or_path, ec)) return load_model_file(name_or_path);
    return builtin_model(name_or_path);
}

}  // namespace mukai
