// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lie.hpp
 * @brief Simply-laced Lie algebras from a Cartan matrix, their affine loop
 *        realization with center c and derivation d, and exact verification
 *        of the Chevalley and Serre relations.
 *
 * Basis: x_alpha for every root (positive roots by height, then the negative
 * roots in the same order) followed by h_1..h_n. With E_alpha the basis of the
 * Frenkel-Kac construction,
 *
 *   [E_a, E_b] = eps(a,b) E_{a+b},   [E_a, E_{-a}] = -a,
 *
 * for a bimultiplicative eps with eps(a_i,a_i) = -1, eps(a_i,a_j) = (-1)^{C_ij}
 * for i < j and 1 for i > j. We set x_a = sgn(a) E_a so that [x_a, x_{-a}] = h_a.
 */

#pragma once

#include "mukai/cartan.hpp"
#include "mukai/root_config.hpp"

#include <map>
#include <memory>
#include <random>

namespace mukai {

/// Sparse integer combination of basis elements.
using LieVector = std::map<std::size_t, Int>;

inline void add_scaled(LieVector& acc, const LieVector& x, Int k) {
    if (k == 0) return;
    for (const auto& [i, c] : x) {
        Int& slot = acc[i];
        slot = checked_add(slot, checked_mul(k, c));
        if (slot == 0) acc.erase(i);
    }
}

inline LieVector scaled(const LieVector& x, Int k) {
    LieVector out;
    add_scaled(out, x, k);
    return out;
}

inline LieVector operator+(const LieVector& a, const LieVector& b) {
    LieVector out = a;
    add_scaled(out, b, 1);
    return out;
}

inline LieVector operator-(const LieVector& a, const LieVector& b) {
    LieVector out = a;
    add_scaled(out, b, -1);
    return out;
}

inline bool is_zero(const LieVector& x) { return x.empty(); }

inline LieVector unit(std::size_t i, Int c = 1) { return c == 0 ? LieVector{} : LieVector{{i, c}}; }

class FiniteLieAlgebra {
public:
    explicit FiniteLieAlgebra(const IntMatrix& cartan) : cartan_(cartan), roots_(root_system(cartan)) {
        const std::size_t n = rank();
        all_roots_ = roots_.all();
        for (std::size_t k = 0; k < all_roots_.size(); ++k) index_[all_roots_[k]] = k;
        const std::size_t N = dim();
        table_.assign(N, std::vector<LieVector>(N));
        const std::size_t R = all_roots_.size();
        for (std::size_t a = 0; a < R; ++a) {
            const IntVec& alpha = all_roots_[a];
            IntVec ca = mat_vec(cartan_, alpha);
            for (std::size_t i = 0; i < n; ++i) {
                table_[R + i][a] = unit(a, ca[i]);
                table_[a][R + i] = unit(a, -ca[i]);
            }
            for (std::size_t b = 0; b < R; ++b) {
                const IntVec& beta = all_roots_[b];
                IntVec sum = add(alpha, beta);
                if (is_zero(sum)) {
                    LieVector h;
                    for (std::size_t i = 0; i < n; ++i)
                        if (alpha[i] != 0) h[R + i] = alpha[i];
                    table_[a][b] = h;
                    continue;
                }
                auto it = index_.find(sum);
                if (it == index_.end()) continue;
                Int s = sign(alpha) * sign(beta) * sign(sum) * epsilon(alpha, beta);
                table_[a][b] = unit(it->second, s);
            }
        }
    }

    const IntMatrix& cartan() const noexcept { return cartan_; }
    const RootSystem& root_system_data() const noexcept { return roots_; }
    const std::vector<IntVec>& roots() const noexcept { return all_roots_; }
    std::size_t rank() const noexcept { return cartan_.rows(); }
    std::size_t num_roots() const noexcept { return all_roots_.size(); }
    std::size_t dim() const noexcept { return num_roots() + rank(); }

    std::size_t root_index(const IntVec& alpha) const {
        auto it = index_.find(alpha);
        if (it == index_.end()) throw PreconditionError("not a root: " + to_string(alpha));
        return it->second;
    }
    bool is_root(const IntVec& alpha) const { return index_.count(alpha) > 0; }
    std::size_t h_index(std::size_t i) const { return num_roots() + i; }

    LieVector x(const IntVec& alpha) const { return unit(root_index(alpha)); }
    LieVector e(std::size_t i) const { return x(simple(i, 1)); }
    LieVector f(std::size_t i) const { return x(simple(i, -1)); }
    LieVector h(std::size_t i) const { return unit(h_index(i)); }

    /// h_alpha = sum alpha_j h_j.
    LieVector h_of(const IntVec& alpha) const {
        LieVector out;
        for (std::size_t j = 0; j < rank(); ++j)
            if (alpha[j] != 0) out[h_index(j)] = alpha[j];
        return out;
    }

    const IntVec& highest_root() const { return roots_.highest(); }

    /// Root of a basis element, or the zero vector for h_i.
    IntVec weight_of(std::size_t k) const {
        return k < num_roots() ? all_roots_[k] : IntVec(rank(), 0);
    }

    std::string basis_label(std::size_t k) const {
        if (k >= num_roots()) return "h" + std::to_string(k - num_roots() + 1);
        return "x" + to_string(all_roots_[k]);
    }

    const LieVector& bracket_basis(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

    LieVector bracket(const LieVector& x, const LieVector& y) const {
        LieVector out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) add_scaled(out, table_[i][j], checked_mul(a, b));
        return out;
    }

    /// Invariant form with kappa(h_i, h_j) = C_ij and kappa(x_a, x_{-a}) = 1.
    Int kappa_basis(std::size_t i, std::size_t j) const {
        const std::size_t R = num_roots();
        if (i >= R && j >= R) return cartan_(i - R, j - R);
        if (i < R && j < R) return is_zero(add(all_roots_[i], all_roots_[j])) ? 1 : 0;
        return 0;
    }

    Int kappa(const LieVector& x, const LieVector& y) const {
        Int s = 0;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) s = checked_add(s, checked_mul(checked_mul(a, b), kappa_basis(i, j)));
        return s;
    }

    /// eps(a, b) = prod eps(a_i, a_j)^{a_i b_j}.
    Int epsilon(const IntVec& a, const IntVec& b) const {
        Int e = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) {
                Int bit = i == j ? 1 : (i < j ? (cartan_(i, j) & 1) : 0);
                e += bit * a[i] * b[j];
            }
        return (e % 2 == 0) ? 1 : -1;
    }

    /// Replaces [b_i, b_j] (and [b_j, b_i] by antisymmetry). Used to build
    /// negative controls for the relation checks.
    void set_bracket(std::size_t i, std::size_t j, const LieVector& value) {
        table_.at(i).at(j) = value;
        table_.at(j).at(i) = scaled(value, -1);
    }

    /// Plain-text bracket table: one line `i j k:c k:c ...` per nonzero bracket.
    std::string export_table() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                const LieVector& v = table_[i][j];
                if (v.empty()) continue;
                os << i << ' ' << j;
                for (const auto& [k, c] : v) os << ' ' << k << ':' << c;
                os << '\n';
            }
        return os.str();
    }

private:
    static Int sign(const IntVec& a) {
        for (Int c : a)
            if (c != 0) return c > 0 ? 1 : -1;
        return 1;
    }
    IntVec simple(std::size_t i, Int s) const {
        if (i >= rank()) throw std::out_of_range("simple root index out of range");
        IntVec v(rank(), 0);
        v[i] = s;
        return v;
    }

    IntMatrix cartan_;
    RootSystem roots_;
    std::vector<IntVec> all_roots_;
    std::map<IntVec, std::size_t> index_;
    std::vector<std::vector<LieVector>> table_;
};

inline FiniteLieAlgebra finite_from_cartan(const IntMatrix& cartan) { return FiniteLieAlgebra(cartan); }

/// Weight multiplicities of the adjoint representation.
inline std::map<IntVec, Int> adjoint_character(const FiniteLieAlgebra& g) {
    std::map<IntVec, Int> ch;
    for (const IntVec& a : g.roots()) ch[a] += 1;
    ch[IntVec(g.rank(), 0)] += static_cast<Int>(g.rank());
    return ch;
}

// ---------------------------------------------------------------------------
// loop algebra C[t, 1/t] (x) g + C c + C d

struct LoopElement {
    std::map<std::pair<Int, std::size_t>, Int> terms;  // (loop degree, basis index) -> coefficient
    Rational c = 0;
    Rational d = 0;

    static LoopElement loop(Int m, const LieVector& x) {
        LoopElement out;
        for (const auto& [k, v] : x)
            if (v != 0) out.terms[{m, k}] = v;
        return out;
    }
    static LoopElement central(Rational k = 1) {
        LoopElement out;
        out.c = k;
        return out;
    }
    static LoopElement derivation(Rational k = 1) {
        LoopElement out;
        out.d = k;
        return out;
    }

    void add_term(Int m, std::size_t k, Int v) {
        if (v == 0) return;
        Int& slot = terms[{m, k}];
        slot = checked_add(slot, v);
        if (slot == 0) terms.erase({m, k});
    }

    friend bool operator==(const LoopElement& a, const LoopElement& b) {
        return a.terms == b.terms && a.c == b.c && a.d == b.d;
    }
};

inline void add_scaled(LoopElement& acc, const LoopElement& x, Int k) {
    if (k == 0) return;
    for (const auto& [key, v] : x.terms) acc.add_term(key.first, key.second, checked_mul(k, v));
    acc.c += x.c * k;
    acc.d += x.d * k;
}

inline LoopElement scaled(const LoopElement& x, Int k) {
    LoopElement out;
    add_scaled(out, x, k);
    return out;
}

inline LoopElement operator+(const LoopElement& a, const LoopElement& b) {
    LoopElement out = a;
    add_scaled(out, b, 1);
    return out;
}

inline LoopElement operator-(const LoopElement& a, const LoopElement& b) {
    LoopElement out = a;
    add_scaled(out, b, -1);
    return out;
}

inline bool is_zero(const LoopElement& x) { return x.terms.empty() && x.c == 0 && x.d == 0; }

/// Untwisted affine algebra with generators e_0..e_n, f_0..f_n, h_0..h_n.
class AffineLieAlgebra {
public:
    AffineLieAlgebra(std::shared_ptr<const FiniteLieAlgebra> finite, const IntVec& marks)
        : g_(std::move(finite)), marks_(marks) {
        const std::size_t n = g_->rank();
        AffineData aff = affine_extension(g_->cartan());
        if (marks_.size() != n + 1) throw DimensionMismatch("marks must have rank + 1 entries");
        if (!is_zero(mat_vec(aff.cartan, marks_)) || marks_ != aff.marks)
            throw PreconditionError("marks are not the normalized null vector of the affine Cartan matrix");
        cartan_ = aff.cartan;
        const IntVec& theta = g_->highest_root();
        e_.push_back(LoopElement::loop(1, g_->x(scale(-1, theta))));
        f_.push_back(LoopElement::loop(-1, g_->x(theta)));
        for (std::size_t i = 0; i < n; ++i) {
            e_.push_back(LoopElement::loop(0, g_->e(i)));
            f_.push_back(LoopElement::loop(0, g_->f(i)));
        }
        h_.push_back(bracket(e_[0], f_[0]));
        for (std::size_t i = 0; i < n; ++i) h_.push_back(LoopElement::loop(0, g_->h(i)));
    }

    const FiniteLieAlgebra& finite() const noexcept { return *g_; }
    const IntMatrix& cartan() const noexcept { return cartan_; }
    const IntVec& marks() const noexcept { return marks_; }
    std::size_t size() const noexcept { return marks_.size(); }

    const LoopElement& e(std::size_t i) const { return e_.at(i); }
    const LoopElement& f(std::size_t i) const { return f_.at(i); }
    const LoopElement& h(std::size_t i) const { return h_.at(i); }
    const std::vector<LoopElement>& e_all() const noexcept { return e_; }
    const std::vector<LoopElement>& f_all() const noexcept { return f_; }
    const std::vector<LoopElement>& h_all() const noexcept { return h_; }

    LoopElement c() const { return LoopElement::central(); }
    LoopElement d() const { return LoopElement::derivation(); }

    /// sum_i a_i h_i.
    LoopElement center_from_marks() const {
        LoopElement out;
        for (std::size_t i = 0; i < size(); ++i) add_scaled(out, h_[i], marks_[i]);
        return out;
    }

    /// [t^m x, t^n y] = t^{m+n} [x,y] + m delta_{m+n,0} kappa(x,y) c,
    /// [d, t^m x] = m t^m x, c central.
    LoopElement bracket(const LoopElement& x, const LoopElement& y) const {
        LoopElement out;
        for (const auto& [kx, a] : x.terms)
            for (const auto& [ky, b] : y.terms) {
                const Int ab = checked_mul(a, b);
                const LieVector& br = g_->bracket_basis(kx.second, ky.second);
                for (const auto& [k, v] : br) out.add_term(kx.first + ky.first, k, checked_mul(ab, v));
                if (kx.first + ky.first == 0) {
                    Int kap = g_->kappa_basis(kx.second, ky.second);
                    if (kap != 0) out.c += Rational(checked_mul(checked_mul(ab, kx.first), kap));
                }
            }
        if (x.d != 0)
            for (const auto& [ky, b] : y.terms) add_rational_term(out, ky.first, ky.second, x.d * b * ky.first);
        if (y.d != 0)
            for (const auto& [kx, a] : x.terms) add_rational_term(out, kx.first, kx.second, -y.d * a * kx.first);
        return out;
    }

private:
    static void add_rational_term(LoopElement& out, Int m, std::size_t k, const Rational& v) {
        if (v == 0) return;
        out.add_term(m, k, to_int(v));
    }

    std::shared_ptr<const FiniteLieAlgebra> g_;
    IntVec marks_;
    IntMatrix cartan_;
    std::vector<LoopElement> e_, f_, h_;
};

inline AffineLieAlgebra affine_realize(std::shared_ptr<const FiniteLieAlgebra> finite, const IntVec& marks) {
    return AffineLieAlgebra(std::move(finite), marks);
}

// ---------------------------------------------------------------------------
// relation checks

struct RelationResult {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;  // first few offending index pairs
};

struct ChevalleyReport {
    std::vector<RelationResult> relations;
    bool all_pass() const {
        return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
    }
    const RelationResult& get(const std::string& name) const {
        for (const auto& r : relations)
            if (r.name == name) return r;
        throw std::out_of_range("no relation named " + name);
    }
};

/// Checks, for generators indexed by the rows of the Cartan matrix A:
///   relation1  [h_i, e_j] =  A_ij e_j
///   relation2  [h_i, f_j] = -A_ij f_j
///   relation3  [e_i, f_j] = delta_ij h_i
///   serre      ad(e_i)^{1 - A_ij} e_j = 0 = ad(f_i)^{1 - A_ij} f_j  (i != j)
/// plus [h_i, h_j] = 0.
template <class Elem, class Bracket>
ChevalleyReport verify_generators(const IntMatrix& A, const std::vector<Elem>& e, const std::vector<Elem>& f,
                                  const std::vector<Elem>& h, Bracket&& br) {
    const std::size_t n = A.rows();
    if (e.size() != n || f.size() != n || h.size() != n) throw DimensionMismatch("generator count differs from rank");
    auto named = [](const char* name) {
        RelationResult r;
        r.name = name;
        return r;
    };
    RelationResult r0 = named("cartan-abelian"), r1 = named("relation1"), r2 = named("relation2"),
                   r3 = named("relation3"), rs = named("serre");
    auto record = [](RelationResult& r, bool ok, std::size_t i, std::size_t j) {
        ++r.checked;
        if (ok) return;
        r.pass = false;
        if (r.failures.size() < 8) r.failures.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            record(r0, is_zero(br(h[i], h[j])), i, j);
            record(r1, br(h[i], e[j]) == scaled(e[j], A(i, j)), i, j);
            record(r2, br(h[i], f[j]) == scaled(f[j], -A(i, j)), i, j);
            record(r3, br(e[i], f[j]) == (i == j ? h[i] : Elem{}), i, j);
            if (i == j) continue;
            const Int power = 1 - A(i, j);
            Elem xe = e[j], xf = f[j];
            for (Int k = 0; k < power; ++k) {
                xe = br(e[i], xe);
                xf = br(f[i], xf);
            }
            record(rs, is_zero(xe) && is_zero(xf), i, j);
        }
    return {{r0, r1, r2, r3, rs}};
}

inline ChevalleyReport verify_chevalley(const FiniteLieAlgebra& g) {
    std::vector<LieVector> e, f, h;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        e.push_back(g.e(i));
        f.push_back(g.f(i));
        h.push_back(g.h(i));
    }
    return verify_generators(g.cartan(), e, f, h,
                             [&](const LieVector& x, const LieVector& y) { return g.bracket(x, y); });
}

inline ChevalleyReport verify_chevalley(const AffineLieAlgebra& g) {
    return verify_generators(g.cartan(), g.e_all(), g.f_all(), g.h_all(),
                             [&](const LoopElement& x, const LoopElement& y) { return g.bracket(x, y); });
}

/// Relations for the generators attached to a configuration: the algebra must
/// come from the Cartan matrix of S (finite) or of its finite part (affine).
inline ChevalleyReport verify_chevalley(const RootConfiguration& S, const FiniteLieAlgebra& g) {
    if (S.kind == ConfigKind::Finite) {
        if (!(S.cartan == g.cartan())) throw PreconditionError("algebra was not built from this configuration");
        return verify_chevalley(g);
    }
    if (S.kind != ConfigKind::Affine) throw PreconditionError("configuration is neither finite nor affine");
    std::vector<std::size_t> order{S.zero_node};
    for (std::size_t i : S.finite_part()) order.push_back(i);
    IntVec marks;
    for (std::size_t i : order) marks.push_back(S.marks[i]);
    auto shared = std::make_shared<const FiniteLieAlgebra>(g);
    AffineLieAlgebra aff(shared, marks);
    if (!(aff.cartan() == S.cartan.submatrix(order)))
        throw PreconditionError("affine Cartan matrix of the algebra differs from the configuration");
    return verify_chevalley(aff);
}

// ---------------------------------------------------------------------------
// identity checks used by the test suites and the CLI

/// Failures of antisymmetry and Jacobi over all basis triples (or a random
/// sample of `samples` triples when samples > 0).
struct IdentityReport {
    std::size_t checked = 0;
    std::size_t antisymmetry_failures = 0;
    std::size_t jacobi_failures = 0;
    bool pass() const { return antisymmetry_failures == 0 && jacobi_failures == 0; }
};

inline IdentityReport check_jacobi(const FiniteLieAlgebra& g, std::size_t samples = 0, std::uint64_t seed = 1) {
    IdentityReport rep;
    const std::size_t N = g.dim();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (!(g.bracket_basis(i, j) == scaled(g.bracket_basis(j, i), -1))) ++rep.antisymmetry_failures;
    auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        LieVector x = unit(i), y = unit(j), z = unit(k);
        LieVector s = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        ++rep.checked;
        if (!is_zero(s)) ++rep.jacobi_failures;
    };
    if (samples == 0) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j)
                for (std::size_t k = j + 1; k < N; ++k) triple(i, j, k);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, N - 1);
        for (std::size_t s = 0; s < samples; ++s) triple(pick(rng), pick(rng), pick(rng));
    }
    return rep;
}

/// Random loop element t^m x_k with |m| <= max_degree, or c, or d.
inline LoopElement random_loop_element(const AffineLieAlgebra& g, Int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, g.finite().dim() + 1);
    std::uniform_int_distribution<Int> deg(-max_degree, max_degree);
    std::size_t k = pick(rng);
    if (k == g.finite().dim()) return g.c();
    if (k == g.finite().dim() + 1) return g.d();
    return LoopElement::loop(deg(rng), unit(k));
}

inline IdentityReport check_loop_jacobi(const AffineLieAlgebra& g, Int max_degree, std::size_t samples,
                                        std::uint64_t seed = 1) {
    IdentityReport rep;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        LoopElement x = random_loop_element(g, max_degree, rng);
        LoopElement y = random_loop_element(g, max_degree, rng);
        LoopElement z = random_loop_element(g, max_degree, rng);
        ++rep.checked;
        if (!(g.bracket(x, y) == scaled(g.bracket(y, x), -1))) ++rep.antisymmetry_failures;
        LoopElement j = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        if (!is_zero(j)) ++rep.jacobi_failures;
    }
    return rep;
}

/// Affine checks: c = sum a_i h_i, the center commutes with every generator,
/// and [d, e_i] = delta_{i0} e_i, [d, f_i] = -delta_{i0} f_i.
struct AffineReport {
    bool center_identity = false;
    bool center_central = false;
    bool derivation = false;
    bool pass() const { return center_identity && center_central && derivation; }
};

inline AffineReport check_affine_identities(const AffineLieAlgebra& g) {
    AffineReport rep;
    LoopElement c = g.center_from_marks();
    rep.center_identity = c == g.c();
    rep.center_central = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        rep.center_central = rep.center_central && is_zero(g.bracket(c, g.e(i))) && is_zero(g.bracket(c, g.f(i))) &&
                             is_zero(g.bracket(g.c(), g.e(i))) && is_zero(g.bracket(g.c(), g.f(i)));
    }
    rep.derivation = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Int s = i == 0 ? 1 : 0;
        rep.derivation = rep.derivation && g.bracket(g.d(), g.e(i)) == scaled(g.e(i), s) &&
                         g.bracket(g.d(), g.f(i)) == scaled(g.f(i), -s);
    }
    return rep;
}

}  // namespace mukai
