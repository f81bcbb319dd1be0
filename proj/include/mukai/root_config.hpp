// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file root_config.hpp
 * @brief Configurations of (-2)-vectors: Cartan matrix, finite / affine
 *        classification, reflections, dominant reduction, the finite sets
 *        B_(xi,d) and the universal extension / division guarantee.
 *
 * Sign conventions: the Cartan matrix is -<v_i, v_j> and a vector x is
 * dominant when <x, v_i> <= 0 for every i.
 */

#pragma once

#include "mukai/config.hpp"
#include "mukai/enumerate.hpp"

#include <deque>
#include <map>
#include <set>

namespace mukai {

enum class ConfigKind { Finite, Affine, Indefinite };

inline std::string to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::Finite: return "Finite";
        case ConfigKind::Affine: return "Affine";
        case ConfigKind::Indefinite: return "Indefinite";
    }
    return "?";
}

struct RootConfiguration {
    Ambient ambient;
    std::vector<IntVec> vectors;
    std::vector<std::string> names;
    IntMatrix cartan;
    ConfigKind kind = ConfigKind::Indefinite;
    std::string label;
    IntVec marks;               // affine only
    IntVec delta;               // affine only, sum marks_i v_i
    std::size_t zero_node = 0;  // affine only, first node with mark 1

    std::size_t size() const noexcept { return vectors.size(); }
    Int pair(const IntVec& x, const IntVec& y) const { return ambient.pair(x, y); }

    /// Ambient vector sum_i c_i v_i.
    IntVec combine(const IntVec& coeffs) const {
        if (coeffs.size() != size()) throw DimensionMismatch("coefficient vector has wrong length");
        IntVec out(ambient.dim(), 0);
        for (std::size_t i = 0; i < size(); ++i) out = axpy(out, coeffs[i], vectors[i]);
        return out;
    }

    /// Indices other than the zero node (the finite part of an affine diagram).
    std::vector<std::size_t> finite_part() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < size(); ++i)
            if (kind != ConfigKind::Affine || i != zero_node) idx.push_back(i);
        return idx;
    }

    std::string kind_string() const {
        if (kind == ConfigKind::Indefinite) return label.empty() ? "Indefinite" : "Indefinite(" + label + ")";
        return to_string(kind) + "(" + label + ")";
    }
};

namespace root_detail {

inline std::vector<std::vector<std::size_t>> components(const IntMatrix& c) {
    const std::size_t n = c.rows();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> nodes{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (j != nodes[k] && c(nodes[k], j) != 0 && comp[j] < 0) {
                    comp[j] = static_cast<int>(out.size());
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(nodes);
    }
    return out;
}

inline std::size_t degree(const IntMatrix& c, std::size_t i) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < c.rows(); ++j)
        if (j != i && c(i, j) != 0) ++d;
    return d;
}

// length of the arm starting at `start` and leaving `from`
inline std::size_t arm_length(const IntMatrix& c, std::size_t from, std::size_t start) {
    std::size_t len = 1, prev = from, cur = start;
    for (;;) {
        std::size_t next = c.rows();
        for (std::size_t j = 0; j < c.rows(); ++j)
            if (j != cur && j != prev && c(cur, j) != 0) next = j;
        if (next == c.rows()) return len;
        prev = cur;
        cur = next;
        ++len;
    }
}

}  // namespace root_detail

/// ADE name of a connected positive definite simply-laced Cartan matrix,
/// decided from the shape of its Dynkin diagram.
inline std::string ade_label(const IntMatrix& c) {
    using namespace root_detail;
    const std::size_t n = c.rows();
    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t d = degree(c, i);
        if (d > 3) throw PreconditionError("Dynkin diagram has a node of degree > 3");
        if (d == 3) branch.push_back(i);
    }
    if (branch.empty()) return "A" + std::to_string(n);
    if (branch.size() > 1) throw PreconditionError("Dynkin diagram has two branch nodes");
    std::vector<std::size_t> arms;
    for (std::size_t j = 0; j < n; ++j)
        if (j != branch[0] && c(branch[0], j) != 0) arms.push_back(arm_length(c, branch[0], j));
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
    throw PreconditionError("Dynkin diagram is not of ADE type");
}

/// Label of a connected affine diagram with the given marks.
inline std::string affine_label(const IntMatrix& c, const IntVec& marks) {
    using namespace root_detail;
    const std::size_t n = c.rows();
    if (n == 2) return "A1^(1)";
    bool cycle = true;
    for (std::size_t i = 0; i < n; ++i)
        if (degree(c, i) != 2) cycle = false;
    if (cycle) return "A" + std::to_string(n - 1) + "^(1)";
    std::size_t drop = std::find(marks.begin(), marks.end(), 1) - marks.begin();
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != drop) rest.push_back(i);
    return ade_label(c.submatrix(rest)) + "^(1)";
}

inline RootConfiguration build_configuration(const std::vector<IntVec>& vectors, const Ambient& ambient,
                                             std::vector<std::string> names = {}) {
    RootConfiguration S;
    S.ambient = ambient;
    S.vectors = vectors;
    if (names.empty())
        for (std::size_t i = 0; i < vectors.size(); ++i) names.push_back("v" + std::to_string(i));
    if (names.size() != vectors.size()) throw DimensionMismatch("names and vectors differ in length");
    S.names = std::move(names);
    const std::size_t n = vectors.size();
    S.cartan = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        ambient.check(vectors[i]);
        for (std::size_t j = 0; j < n; ++j) {
            Int p = ambient.pair(vectors[i], vectors[j]);
            if (i == j && p != -2)
                throw PreconditionError("vector " + S.names[i] + " has square " + std::to_string(p) + ", not -2");
            if (i != j && p < 0)
                throw PreconditionError("vectors " + S.names[i] + " and " + S.names[j] + " pair negatively");
            S.cartan(i, j) = -p;
        }
    }
    if (n == 0) {
        S.kind = ConfigKind::Finite;
        S.label = "empty";
        return S;
    }
    RatMatrix cr = to_rational(S.cartan);
    DefinitenessResult def = classify_symmetric(cr);
    auto comps = root_detail::components(S.cartan);
    auto join_labels = [&](auto&& name_of) {
        std::string out;
        for (const auto& comp : comps) out += (out.empty() ? "" : "+") + name_of(comp);
        return out;
    };
    if (def.kind == Definiteness::PositiveDefinite) {
        S.kind = ConfigKind::Finite;
        S.label = join_labels([&](const auto& comp) { return ade_label(S.cartan.submatrix(comp)); });
        return S;
    }
    if (def.kind == Definiteness::PositiveSemidefinite && def.kernel_dim == 1) {
        IntVec marks = primitive_integer(rational_kernel(cr).front());
        if (marks[std::find_if(marks.begin(), marks.end(), [](Int m) { return m != 0; }) - marks.begin()] < 0)
            marks = scale(-1, marks);
        bool positive = std::all_of(marks.begin(), marks.end(), [](Int m) { return m > 0; });
        if (comps.size() == 1 && positive) {
            S.kind = ConfigKind::Affine;
            S.marks = marks;
            S.delta = S.combine(marks);
            S.zero_node = std::find(marks.begin(), marks.end(), 1) - marks.begin();
            if (S.zero_node == n) throw PreconditionError("affine diagram without a node of mark 1");
            S.label = affine_label(S.cartan, marks);
            return S;
        }
        // affine plus finite components: semidefinite but not of affine kind
        S.kind = ConfigKind::Indefinite;
        S.label = join_labels([&](const auto& comp) {
            IntMatrix sub = S.cartan.submatrix(comp);
            if (classify_symmetric(to_rational(sub)).kind == Definiteness::PositiveDefinite) return ade_label(sub);
            IntVec m = primitive_integer(rational_kernel(to_rational(sub)).front());
            if (m[0] < 0) m = scale(-1, m);
            return affine_label(sub, m);
        });
        return S;
    }
    S.kind = ConfigKind::Indefinite;
    return S;
}

inline RootConfiguration build_configuration(const ModelSpec& spec) {
    return build_configuration(spec.roots, spec.ambient(), spec.root_names);
}

// ---------------------------------------------------------------------------
// reflections

/// R_i(x) = x + <x, v_i> v_i.
inline IntVec reflect(std::size_t i, const IntVec& x, const RootConfiguration& S) {
    if (i >= S.size()) throw std::out_of_range("reflection index " + std::to_string(i) + " out of range");
    S.ambient.check(x);
    return axpy(x, S.pair(x, S.vectors[i]), S.vectors[i]);
}

/// Applies the word left to right: R_{w_k} ... R_{w_1} x.
inline IntVec apply_word(const std::vector<std::size_t>& word, IntVec x, const RootConfiguration& S) {
    for (std::size_t i : word) x = reflect(i, x, S);
    return x;
}

/// (<v_i, v>)_i.
inline IntVec weight(const IntVec& v, const RootConfiguration& S) {
    S.ambient.check(v);
    IntVec w(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) w[i] = S.pair(S.vectors[i], v);
    return w;
}

inline bool is_dominant(const IntVec& x, const RootConfiguration& S) {
    IntVec w = weight(x, S);
    return std::all_of(w.begin(), w.end(), [](Int p) { return p <= 0; });
}

struct Reduction {
    IntVec representative;
    std::vector<std::size_t> word;
};

/// Walks to the dominant representative of the Weyl orbit of x, reflecting at
/// the smallest index with <x, v_i> > 0. For affine configurations this is
/// only possible when <x, delta> < 0 or x is orthogonal to every v_i; other
/// inputs raise PreconditionError instead of looping.
inline Reduction reduce_to_dominant(const IntVec& x, const RootConfiguration& S, std::size_t max_steps = 1000000) {
    S.ambient.check(x);
    if (S.kind == ConfigKind::Affine && !is_dominant(x, S)) {
        Int xd = S.pair(x, S.delta);
        if (xd > 0) throw PreconditionError("<x, delta> > 0: the orbit has no dominant representative");
        if (xd == 0) throw PreconditionError("<x, delta> = 0 and x is not orthogonal to the roots: reduction does not terminate");
    }
    Reduction red{x, {}};
    for (std::size_t step = 0;; ++step) {
        std::size_t i = 0;
        Int p = 0;
        for (; i < S.size(); ++i) {
            p = S.pair(red.representative, S.vectors[i]);
            if (p > 0) break;
        }
        if (i == S.size()) return red;
        if (step >= max_steps) throw PreconditionError("dominant reduction exceeded the step limit");
        red.representative = axpy(red.representative, p, S.vectors[i]);
        red.word.push_back(i);
    }
}

/// Full Weyl orbit by breadth-first search; throws when it exceeds `limit`.
inline std::vector<IntVec> weyl_orbit(const IntVec& x, const RootConfiguration& S, std::size_t limit = 100000) {
    S.ambient.check(x);
    std::set<IntVec> seen{x};
    std::deque<IntVec> queue{x};
    while (!queue.empty()) {
        IntVec y = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < S.size(); ++i) {
            IntVec z = reflect(i, y, S);
            if (seen.insert(z).second) {
                if (seen.size() > limit) throw PreconditionError("orbit exceeds " + std::to_string(limit) + " elements");
                queue.push_back(z);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// B_(xi, d)

/// Coefficient vectors x with (x^2) - 2 (xi, x) + d >= 0 where x = sum x_i v_i.
/// Requires the span of S to be negative definite.
inline std::vector<IntVec> enumerate_B(const IntVec& xi, Int d, const RootConfiguration& S) {
    if (S.kind != ConfigKind::Finite) throw PreconditionError("B_(xi,d) needs a negative definite configuration");
    // (x^2) = -x^T C x, so the condition is x^T C x + 2 b.x <= d with b_i = (xi, v_i)
    return enumerate_quadratic(S.cartan, weight(xi, S), d);
}

// ---------------------------------------------------------------------------
// universal extensions and divisions

enum class Guarantee { Guaranteed, OneSidedDivision, OneSidedExtension, NotGuaranteed };

inline std::string to_string(Guarantee g) {
    switch (g) {
        case Guarantee::Guaranteed: return "Guaranteed";
        case Guarantee::OneSidedDivision: return "GuaranteedOneSided(division)";
        case Guarantee::OneSidedExtension: return "GuaranteedOneSided(extension)";
        case Guarantee::NotGuaranteed: return "NotGuaranteed";
    }
    return "?";
}

inline Guarantee division_guarantee(const RootConfiguration& S, const IntVec& v) {
    if (S.kind == ConfigKind::Finite) return Guarantee::Guaranteed;
    if (S.kind == ConfigKind::Affine) {
        Int p = S.pair(v, S.delta);
        if (p > 0) return Guarantee::OneSidedDivision;
        if (p < 0) return Guarantee::OneSidedExtension;
    }
    return Guarantee::NotGuaranteed;
}

}  // namespace mukai
