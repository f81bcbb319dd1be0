// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief Plain-text model files: a surface lattice plus an optional list of
 *        root vectors, a polarization and a twisting class.
 *
 * Format: one `key = value` per line, `#` starts a comment.
 *
 *   name        = k3-a2
 *   basis_names = x0 x1 x2
 *   gram        = 2 3 3; 3 2 3; 3 3 2
 *   canonical   = 0 0 0          # integers, or a divisor expression
 *   pg          = 1
 *   q           = 0
 *   k_trivial   = true           # optional, inferred from canonical
 *   class.H     = x0 + x1 + x2
 *   root_kind   = mukai          # curve | rank0 | mukai
 *   roots       = v0 v1 v2
 *   root.v0     = 2 | x0 | 1     # mukai: r | c1 | a, rank0: c1 | chi, curve: c1
 *   polarization = H
 *   twist       = 6 | H | 3      # r | c1 | chi
 *
 * Divisor expressions are integer combinations of basis names and classes,
 * e.g. `2*sigma + f - C1`. Unknown keys are rejected.
 */

#pragma once

#include "mukai/vectors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>

namespace mukai {

struct ModelSpec {
    SurfaceModel surface;
    VectorKind root_kind = VectorKind::Curve;
    std::vector<std::string> root_names;
    std::vector<IntVec> roots;  // ambient coordinates
    std::optional<IntVec> polarization;
    std::optional<TwistData> twist;

    Ambient ambient() const { return Ambient::of(root_kind, surface); }
};

inline bool operator==(const TwistData& a, const TwistData& b) {
    return a.r == b.r && a.c1 == b.c1 && a.chi == b.chi;
}

inline bool operator==(const ModelSpec& a, const ModelSpec& b) {
    const SurfaceModel &x = a.surface, &y = b.surface;
    return x.name == y.name && x.ns == y.ns && x.canonical == y.canonical && x.pg == y.pg && x.q == y.q &&
           x.chi_O == y.chi_O && x.named_classes == y.named_classes && x.k_trivial == y.k_trivial &&
           a.root_kind == b.root_kind && a.root_names == b.root_names && a.roots == b.roots &&
           a.polarization == b.polarization && a.twist == b.twist;
}

namespace config_detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

inline std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::optional<Int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    try {
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return static_cast<Int>(v);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::optional<IntVec> parse_int_list(const std::string& s) {
    IntVec out;
    for (const std::string& w : words(s)) {
        auto v = parse_int(w);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '\'' || c == '.';
}

}  // namespace config_detail

/// Evaluates an integer combination of named classes, e.g. "2*sigma + f - C1".
/// `lookup` resolves a name to a vector of length `rank`.
template <class Lookup>
IntVec parse_divisor(const std::string& expr, std::size_t rank, Lookup&& lookup) {
    using namespace config_detail;
    IntVec acc(rank, 0);
    std::size_t i = 0;
    const std::size_t n = expr.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> IntVec {
        throw PreconditionError("cannot parse divisor '" + expr + "': " + why);
    };
    skip();
    if (i == n) fail("empty expression");
    bool first = true;
    while (true) {
        skip();
        if (i == n) break;
        Int sign = 1;
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Int coeff = 1;
        bool have_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(expr[i]))) {
            std::size_t b = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
            auto v = parse_int(expr.substr(b, i - b));
            if (!v) fail("bad coefficient");
            coeff = *v;
            have_coeff = true;
            skip();
            if (i < n && expr[i] == '*') {
                ++i;
                skip();
            }
        }
        if (i < n && (std::isalpha(static_cast<unsigned char>(expr[i])) || expr[i] == '_')) {
            std::size_t b = i;
            while (i < n && ident_char(expr[i])) ++i;
            IntVec v = lookup(expr.substr(b, i - b));
            if (v.size() != rank) fail("class has wrong length");
            acc = axpy(acc, checked_mul(sign, coeff), v);
        } else if (have_coeff) {
            if (coeff != 0) fail("bare nonzero integer term");
        } else {
            fail("unexpected character");
        }
    }
    return acc;
}

inline IntVec parse_divisor(const std::string& expr, const SurfaceModel& X) {
    return parse_divisor(expr, X.rank(), [&](const std::string& name) { return X.named(name); });
}

/// Integer coordinates when the text is exactly `rank` integers, otherwise a
/// divisor expression.
inline IntVec parse_class(const std::string& text, const SurfaceModel& X) {
    auto ints = config_detail::parse_int_list(text);
    if (ints && ints->size() == X.rank() && !ints->empty()) return *ints;
    return parse_divisor(text, X);
}

/// A vector of the given kind: "c1" (curve), "c1 | chi" (rank0), "r | c1 | a"
/// (mukai), or the raw ambient coordinates.
inline IntVec parse_ambient_vector(const std::string& text, VectorKind kind, const SurfaceModel& X) {
    using namespace config_detail;
    Ambient amb = Ambient::of(kind, X);
    auto raw = parse_int_list(text);
    if (raw && raw->size() == amb.dim() && !raw->empty()) return *raw;
    std::vector<std::string> parts = split(text, '|');
    switch (kind) {
        case VectorKind::Curve:
            if (parts.size() != 1) throw PreconditionError("expected a single divisor");
            return parse_class(parts[0], X);
        case VectorKind::Rank0: {
            if (parts.size() != 2) throw PreconditionError("expected 'c1 | chi'");
            auto chi = parse_int(parts[1]);
            if (!chi) throw PreconditionError("chi must be an integer");
            return amb.from(OneDimClass{parse_class(parts[0], X), *chi});
        }
        case VectorKind::Mukai: {
            if (parts.size() != 3) throw PreconditionError("expected 'r | c1 | a'");
            auto r = parse_int(parts[0]);
            auto a = parse_int(parts[2]);
            if (!r || !a) throw PreconditionError("r and a must be integers");
            return amb.from(MukaiVector{*r, parse_class(parts[1], X), checked_mul(2, *a)});
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// reader

inline ModelSpec parse_model(const std::string& text) {
    using namespace config_detail;
    struct Entry {
        std::size_t line;
        std::string key, value;
    };
    std::vector<Entry> entries;
    std::map<std::string, std::size_t> seen;
    {
        std::istringstream in(text);
        std::string raw;
        std::size_t lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = raw.substr(0, raw.find('#'));
            line = trim(line);
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) throw ConfigError(lineno, "", "expected 'key = value'");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty()) throw ConfigError(lineno, "", "empty key");
            if (seen.count(key)) throw ConfigError(lineno, key, "duplicate key");
            static const std::set<std::string> known = {"name", "basis_names", "gram", "canonical", "pg", "q",
                                                        "k_trivial", "root_kind", "roots", "polarization",
                                                        "twist"};
            bool prefixed = (key.rfind("class.", 0) == 0 && key.size() > 6) ||
                            (key.rfind("root.", 0) == 0 && key.size() > 5);
            if (!known.count(key) && !prefixed) throw ConfigError(lineno, key, "unknown key");
            seen[key] = entries.size();
            entries.push_back({lineno, key, value});
        }
    }
    auto find = [&](const std::string& key) -> const Entry* {
        auto it = seen.find(key);
        return it == seen.end() ? nullptr : &entries[it->second];
    };
    auto require = [&](const std::string& key) -> const Entry& {
        const Entry* e = find(key);
        if (!e) throw ConfigError(0, key, "missing required key");
        return *e;
    };
    // Wraps a computation so that library errors carry the offending line.
    auto guarded = [](const Entry& e, auto&& fn) {
        try {
            return fn();
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ConfigError(e.line, e.key, ex.what());
        }
    };
    auto int_field = [&](const std::string& key, Int dflt) -> Int {
        const Entry* e = find(key);
        if (!e) return dflt;
        auto v = parse_int(e->value);
        if (!v) throw ConfigError(e->line, key, "expected an integer");
        return *v;
    };

    ModelSpec spec;
    SurfaceModel& X = spec.surface;
    X.name = find("name") ? find("name")->value : "custom";

    const Entry& names_e = require("basis_names");
    std::vector<std::string> names = words(names_e.value);
    const Entry& gram_e = require("gram");
    std::vector<std::vector<Int>> rows;
    for (const std::string& row : split(gram_e.value, ';')) {
        auto ints = parse_int_list(row);
        if (!ints) throw ConfigError(gram_e.line, "gram", "non-integer entry");
        rows.push_back(*ints);
    }
    if (rows.size() != names.size())
        throw ConfigError(gram_e.line, "gram", "expected " + std::to_string(names.size()) + " rows");
    for (const auto& r : rows)
        if (r.size() != names.size()) throw ConfigError(gram_e.line, "gram", "row length differs from rank");
    X.ns = guarded(gram_e, [&] { return IntersectionLattice(IntMatrix::from_rows(rows), names); });

    X.pg = int_field("pg", 0);
    X.q = int_field("q", 0);
    X.chi_O = 1 - X.q + X.pg;

    // class definitions, in file order so later ones may refer to earlier ones
    for (const Entry& e : entries) {
        if (e.key.rfind("class.", 0) != 0) continue;
        std::string cname = e.key.substr(6);
        if (X.ns.has_basis(cname)) throw ConfigError(e.line, e.key, "class name shadows a basis element");
        X.named_classes[cname] = guarded(e, [&] { return parse_class(e.value, X); });
    }

    if (const Entry* e = find("canonical")) {
        X.canonical = guarded(*e, [&] { return parse_class(e->value, X); });
    } else {
        X.canonical = IntVec(X.rank(), 0);
    }
    X.k_trivial = is_zero(mat_vec(X.ns.gram(), X.canonical));
    if (const Entry* e = find("k_trivial")) {
        if (e->value == "true") {
            if (!X.k_trivial) throw ConfigError(e->line, e->key, "canonical class is not numerically trivial");
        } else if (e->value == "false") {
            X.k_trivial = false;
        } else {
            throw ConfigError(e->line, e->key, "expected true or false");
        }
    }
    {
        const Entry* e = find("pg");
        const Entry& at = e ? *e : names_e;
        guarded(at, [&] {
            X.validate();
            return 0;
        });
    }

    if (const Entry* e = find("root_kind")) {
        if (e->value == "curve") spec.root_kind = VectorKind::Curve;
        else if (e->value == "rank0") spec.root_kind = VectorKind::Rank0;
        else if (e->value == "mukai") spec.root_kind = VectorKind::Mukai;
        else throw ConfigError(e->line, e->key, "expected curve, rank0 or mukai");
    }
    std::vector<std::string> order;
    if (const Entry* e = find("roots")) {
        order = words(e->value);
    } else {
        for (const Entry& r : entries)
            if (r.key.rfind("root.", 0) == 0) order.push_back(r.key.substr(5));
    }
    for (const Entry& r : entries)
        if (r.key.rfind("root.", 0) == 0 && std::find(order.begin(), order.end(), r.key.substr(5)) == order.end())
            throw ConfigError(r.line, r.key, "root not listed in 'roots'");
    Ambient amb = guarded(find("root_kind") ? *find("root_kind") : names_e,
                          [&] { return Ambient::of(spec.root_kind, X); });
    for (const std::string& rn : order) {
        const Entry* e = find("root." + rn);
        IntVec coords;
        if (!e) {
            if (spec.root_kind != VectorKind::Curve || !X.has_named(rn)) {
                const Entry* re = find("roots");
                throw ConfigError(re ? re->line : 0, "root." + rn, "root vector is not defined");
            }
            coords = X.named(rn);
        } else {
            coords = guarded(*e, [&] { return parse_ambient_vector(e->value, spec.root_kind, X); });
        }
        spec.root_names.push_back(rn);
        spec.roots.push_back(coords);
    }

    if (const Entry* e = find("polarization")) spec.polarization = guarded(*e, [&] { return parse_class(e->value, X); });
    if (const Entry* e = find("twist")) {
        spec.twist = guarded(*e, [&] {
            std::vector<std::string> parts = split(e->value, '|');
            if (parts.size() != 3) throw PreconditionError("expected 'r | c1 | chi'");
            auto r = parse_int(parts[0]);
            auto chi = parse_int(parts[2]);
            if (!r || !chi) throw PreconditionError("r and chi must be integers");
            return TwistData(*r, parse_class(parts[1], X), *chi);
        });
    }
    return spec;
}

inline ModelSpec load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "", "cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

// ---------------------------------------------------------------------------
// writer

namespace config_detail {
inline std::string ints(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}
}  // namespace config_detail

inline std::string write_model(const ModelSpec& spec) {
    using config_detail::ints;
    const SurfaceModel& X = spec.surface;
    std::ostringstream os;
    os << "name = " << X.name << "\n";
    os << "basis_names =";
    for (const auto& n : X.ns.basis_names()) os << ' ' << n;
    os << "\ngram = ";
    for (std::size_t i = 0; i < X.rank(); ++i) os << (i ? "; " : "") << ints(X.ns.gram().row(i));
    os << "\ncanonical = " << ints(X.canonical) << "\n";
    os << "pg = " << X.pg << "\nq = " << X.q << "\n";
    os << "k_trivial = " << (X.k_trivial ? "true" : "false") << "\n";
    for (const auto& [k, v] : X.named_classes) os << "class." << k << " = " << ints(v) << "\n";
    if (!spec.roots.empty()) {
        Ambient amb = spec.ambient();
        os << "root_kind = " << to_string(spec.root_kind) << "\n";
        os << "roots =";
        for (const auto& n : spec.root_names) os << ' ' << n;
        os << "\n";
        for (std::size_t i = 0; i < spec.roots.size(); ++i) {
            os << "root." << spec.root_names[i] << " = ";
            const IntVec& x = spec.roots[i];
            switch (spec.root_kind) {
                case VectorKind::Curve: os << ints(x); break;
                case VectorKind::Rank0: {
                    OneDimClass c = amb.to_rank0(x);
                    os << ints(c.c1) << " | " << c.chi;
                    break;
                }
                case VectorKind::Mukai: {
                    MukaiVector m = amb.to_mukai(x);
                    os << m.r << " | " << ints(m.c1) << " | " << m.a();
                    break;
                }
            }
            os << "\n";
        }
    }
    if (spec.polarization) os << "polarization = " << ints(*spec.polarization) << "\n";
    if (spec.twist) os << "twist = " << spec.twist->r << " | " << ints(spec.twist->c1) << " | " << spec.twist->chi << "\n";
    return os.str();
}

}  // namespace mukai
