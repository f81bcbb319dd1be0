// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cartan.hpp
 * @brief Simply-laced Cartan matrices by type label, root systems by closure
 *        and the affine extension through the highest root.
 */

#pragma once

#include "mukai/linalg.hpp"

#include <cctype>
#include <map>
#include <set>

namespace mukai {

struct CartanType {
    char series = 'A';  // A, D or E
    std::size_t rank = 1;
    bool affine = false;

    std::string finite_label() const { return std::string(1, series) + std::to_string(rank); }
    std::string label() const { return affine ? finite_label() + "^(1)" : finite_label(); }
};

/// Accepts "A2", "D4", "E8" and affine spellings "A2^(1)", "A2^1", "A2affine".
inline CartanType parse_cartan_type(const std::string& text) {
    std::string s = text;
    CartanType t;
    for (const char* suffix : {"^(1)", "^1", "affine", "_affine"}) {
        std::string suf(suffix);
        if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
            s = s.substr(0, s.size() - suf.size());
            t.affine = true;
            break;
        }
    }
    if (s.size() < 2) throw PreconditionError("bad Cartan type '" + text + "'");
    t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::string digits = s.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
        throw PreconditionError("bad Cartan type '" + text + "'");
    t.rank = static_cast<std::size_t>(std::stoul(digits));
    bool ok = (t.series == 'A' && t.rank >= 1) || (t.series == 'D' && t.rank >= 4) ||
              (t.series == 'E' && t.rank >= 6 && t.rank <= 8);
    if (!ok) throw PreconditionError("not a simply-laced finite type: '" + text + "'");
    return t;
}

/// Finite Cartan matrix in Bourbaki numbering (0-based).
inline IntMatrix finite_cartan(const CartanType& t) {
    const std::size_t n = t.rank;
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
    auto edge = [&](std::size_t a, std::size_t b) { c(a, b) = c(b, a) = -1; };
    switch (t.series) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case 'E':
            // 1-3-4-5-6-7-8 with 2 attached to 4
            edge(0, 2);
            edge(1, 3);
            for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1);
            break;
        default:
            throw PreconditionError("unknown series");
    }
    return c;
}

inline IntMatrix finite_cartan(const std::string& label) { return finite_cartan(parse_cartan_type(label)); }

/// Roots of a simply-laced finite Cartan matrix in simple-root coordinates.
/// Positive roots are ordered by height, then lexicographically; negatives
/// follow in the same order.
struct RootSystem {
    IntMatrix cartan;
    std::vector<IntVec> positive;

    std::size_t rank() const { return cartan.rows(); }
    Int pair(const IntVec& a, const IntVec& b) const { return bilinear(cartan, a, b); }

    std::vector<IntVec> all() const {
        std::vector<IntVec> out = positive;
        for (const IntVec& p : positive) out.push_back(scale(-1, p));
        return out;
    }

    /// The unique positive root of maximal height.
    const IntVec& highest() const { return positive.back(); }
};

inline Int height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

inline RootSystem root_system(const IntMatrix& cartan) {
    const std::size_t n = cartan.rows();
    if (!cartan.is_symmetric()) throw PreconditionError("Cartan matrix is not symmetric");
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan(i, i) != 2) throw PreconditionError("Cartan diagonal must be 2");
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (cartan(i, j) > 0 || cartan(i, j) < -1))
                throw PreconditionError("Cartan matrix is not simply laced");
    }
    if (classify_symmetric(to_rational(cartan)).kind != Definiteness::PositiveDefinite)
        throw PreconditionError("Cartan matrix is not positive definite");
    std::set<IntVec> seen;
    std::vector<IntVec> layer;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        seen.insert(e);
    }
    std::vector<IntVec> positive;
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        positive.insert(positive.end(), layer.begin(), layer.end());
        std::vector<IntVec> next;
        for (const IntVec& b : layer)
            for (std::size_t i = 0; i < n; ++i) {
                Int p = 0;
                for (std::size_t j = 0; j < n; ++j) p += b[j] * cartan(j, i);
                if (p != -1) continue;
                IntVec c = b;
                ++c[i];
                if (seen.insert(c).second) next.push_back(c);
            }
        layer = std::move(next);
    }
    return {cartan, std::move(positive)};
}

/// Affine extension: node 0 is -theta, nodes 1..n the finite simple roots.
struct AffineData {
    IntMatrix cartan;  // (n+1) x (n+1)
    IntVec marks;      // (1, theta coefficients)
    IntVec theta;
};

inline AffineData affine_extension(const IntMatrix& finite) {
    RootSystem rs = root_system(finite);
    const std::size_t n = finite.rows();
    const IntVec& theta = rs.highest();
    IntVec ct = mat_vec(finite, theta);
    IntMatrix a(n + 1, n + 1);
    a(0, 0) = 2;
    for (std::size_t j = 0; j < n; ++j) {
        a(0, j + 1) = a(j + 1, 0) = -ct[j];
        for (std::size_t k = 0; k < n; ++k) a(j + 1, k + 1) = finite(j, k);
    }
    IntVec marks{1};
    marks.insert(marks.end(), theta.begin(), theta.end());
    return {a, marks, theta};
}

inline IntMatrix cartan_matrix(const CartanType& t) {
    IntMatrix f = finite_cartan(t);
    return t.affine ? affine_extension(f).cartan : f;
}

}  // namespace mukai
