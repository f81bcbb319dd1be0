// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file surface.hpp
 * @brief Integer intersection lattices and the numerical data of a surface.
 */

#pragma once

#include "mukai/common.hpp"

#include <map>
#include <set>
#include <string>

namespace mukai {

class IntersectionLattice {
public:
    IntersectionLattice() = default;
    IntersectionLattice(IntMatrix gram, std::vector<std::string> basis_names)
        : gram_(std::move(gram)), names_(std::move(basis_names)) {
        if (!gram_.is_symmetric()) throw PreconditionError("intersection form is not symmetric");
        if (names_.size() != gram_.rows()) throw DimensionMismatch("basis_names length differs from rank");
        std::set<std::string> seen(names_.begin(), names_.end());
        if (seen.size() != names_.size()) throw PreconditionError("basis_names are not unique");
    }

    std::size_t rank() const noexcept { return gram_.rows(); }
    const IntMatrix& gram() const noexcept { return gram_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }

    Int pair(const IntVec& x, const IntVec& y) const { return bilinear(gram_, x, y); }
    Int square(const IntVec& x) const { return pair(x, x); }

    void check(const IntVec& x) const {
        if (x.size() != rank()) throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                                                        " does not live in a rank " +
                                                        std::to_string(rank()) + " lattice");
    }

    /// Unit vector of the named basis element.
    IntVec basis_vector(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) {
                IntVec e(rank(), 0);
                e[i] = 1;
                return e;
            }
        throw PreconditionError("unknown basis element '" + name + "'");
    }

    bool has_basis(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
        return a.gram_ == b.gram_ && a.names_ == b.names_;
    }

private:
    IntMatrix gram_;
    std::vector<std::string> names_;
};

/// Numerical shadow of a smooth projective surface.
struct SurfaceModel {
    std::string name;
    IntersectionLattice ns;
    IntVec canonical;
    Int pg = 0;
    Int q = 0;
    Int chi_O = 1;
    std::map<std::string, IntVec> named_classes;
    bool k_trivial = false;

    std::size_t rank() const noexcept { return ns.rank(); }

    /// Named class or basis element.
    IntVec named(const std::string& key) const {
        auto it = named_classes.find(key);
        if (it != named_classes.end()) return it->second;
        if (ns.has_basis(key)) return ns.basis_vector(key);
        throw PreconditionError("surface '" + name + "' has no class named '" + key + "'");
    }

    bool has_named(const std::string& key) const {
        return named_classes.count(key) > 0 || ns.has_basis(key);
    }

    /// Throws unless the model satisfies its structural invariants.
    void validate() const {
        ns.check(canonical);
        if (pg < 0 || q < 0) throw PreconditionError("pg and q must be nonnegative");
        if (chi_O != 1 - q + pg) throw PreconditionError("chi(O) must equal 1 - q + pg");
        for (const auto& [k, v] : named_classes) {
            if (v.size() != rank()) throw DimensionMismatch("named class '" + k + "' has wrong length");
        }
        if (k_trivial) {
            IntVec kg = mat_vec(ns.gram(), canonical);
            if (!is_zero(kg)) throw PreconditionError("canonical class is not numerically trivial");
        }
    }
};

}  // namespace mukai
