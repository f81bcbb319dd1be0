// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief JSON serialization of results and a small schema check for reports.
 *
 * Objects use nlohmann::json's default (sorted) key order, so dumps are
 * byte-stable across runs.
 */

#pragma once

#include "mukai/elliptic.hpp"
#include "mukai/lie.hpp"
#include "mukai/moduli.hpp"
#include "mukai/rep_model.hpp"
#include "mukai/root_config.hpp"

#include <nlohmann/json.hpp>

namespace mukai {

using json = nlohmann::json;

inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

inline std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline json to_json(const GammaVector& g) { return {{"r", g.r}, {"c1", g.c1}, {"chi", g.chi}}; }

inline json to_json(const RootConfiguration& S) {
    json j{{"kind", to_string(S.kind)},
           {"label", S.label},
           {"type", S.kind_string()},
           {"ambient", to_string(S.ambient.kind)},
           {"names", S.names},
           {"vectors", S.vectors},
           {"cartan", to_json(S.cartan)}};
    if (S.kind == ConfigKind::Affine) {
        j["marks"] = S.marks;
        j["delta"] = S.delta;
        j["zero_node"] = S.zero_node;
    }
    return j;
}

inline json to_json(const ModuliDescriptor& d) {
    json j{{"surface", d.surface},
           {"vector", {d.vector.r, d.vector.c1, d.vector.a()}},
           {"exists", d.exists},
           {"self_intersection", d.self_intersection},
           {"flags", d.flags}};
    j["dimension"] = d.dimension ? json(*d.dimension) : json(nullptr);
    j["poincare"] = d.poincare ? json(*d.poincare) : json(nullptr);
    j["minimality"] = d.minimality ? json(*d.minimality) : json(nullptr);
    return j;
}

inline json to_json(const GradedModule& M) {
    json keys = json::array();
    for (const auto& [x, e] : M.dims) {
        json k{{"offset", x}, {"weight", M.weight_at(x)}, {"dim", e.dim}};
        if (e.poincare) k["poincare"] = *e.poincare;
        keys.push_back(std::move(k));
    }
    return {{"base", M.base}, {"keys", keys}, {"total_dim", M.total_dim()}};
}

inline json to_json(const ChevalleyReport& r) {
    json rel = json::object();
    for (const auto& x : r.relations)
        rel[x.name] = {{"pass", x.pass}, {"checked", x.checked}, {"failures", x.failures}};
    return {{"relations", rel}, {"pass", r.all_pass()}};
}

inline json to_json(const IdentityReport& r) {
    return {{"checked", r.checked},
            {"antisymmetry_failures", r.antisymmetry_failures},
            {"jacobi_failures", r.jacobi_failures},
            {"pass", r.pass()}};
}

inline json to_json(const AffineReport& r) {
    return {{"center_identity", r.center_identity},
            {"center_central", r.center_central},
            {"derivation", r.derivation},
            {"pass", r.pass()}};
}

inline json to_json(const Rank0Result& r) {
    json j{{"verdict", to_string(r.verdict)},
           {"fiber_degree", r.fiber_degree},
           {"enumeration_radius", rational_string(r.enumeration_radius)},
           {"classes_checked", r.classes_checked}};
    if (r.witness) {
        j["witness"] = *r.witness;
        j["witness_pairing"] = *r.witness_pairing;
    }
    return j;
}

inline json to_json(const TorsionFreeResult& r) {
    json j{{"verdict", to_string(r.verdict)},
           {"l", r.l},
           {"self_chi", r.self_chi},
           {"mu_stable_locally_free", r.mu_stable_locally_free},
           {"enumeration_radius", rational_string(r.enumeration_radius)},
           {"classes_checked", r.classes_checked}};
    if (r.witness) {
        j["witness"] = to_json(*r.witness);
        j["witness_chi"] = *r.witness_chi;
        j["witness_D"] = *r.witness_D;
    }
    return j;
}

// ---------------------------------------------------------------------------
// schema

enum class JsonType { Any, String, Bool, Integer, Array, Object, Nullable };

struct FieldSpec {
    std::string name;
    JsonType type;
};

/// Required top-level fields of the report emitted by each command.
inline const std::map<std::string, std::vector<FieldSpec>>& report_schemas() {
    using T = JsonType;
    static const std::map<std::string, std::vector<FieldSpec>> schemas{
        {"classify", {{"configuration", T::Object}}},
        {"reflect", {{"input", T::Array}, {"index", T::Integer}, {"result", T::Array}}},
        {"reduce", {{"input", T::Array}, {"representative", T::Array}, {"word", T::Array}}},
        {"orbit", {{"input", T::Array}, {"orbit", T::Array}, {"size", T::Integer}}},
        {"exists", {{"descriptor", T::Object}}},
        {"dim", {{"input", T::Array}, {"dimension", T::Nullable}, {"exists", T::Any}}},
        {"poincare", {{"n", T::Integer}, {"poincare", T::Array}, {"euler", T::Integer}}},
        {"bset", {{"xi", T::Array}, {"d", T::Integer}, {"elements", T::Array}, {"count", T::Integer}}},
        {"verify-lie", {{"type", T::String}, {"chevalley", T::Object}, {"pass", T::Bool}}},
        {"verify-module", {{"kind", T::String}, {"module", T::Object}, {"pass", T::Bool}}},
        {"verify-weyl", {{"input", T::Array}, {"words", T::Array}, {"failures", T::Integer}, {"pass", T::Bool}}},
        {"elliptic-exists",
         {{"query", T::Object}, {"verdict", T::String}, {"enumeration_radius", T::String}, {"classes_checked", T::Integer}}},
        {"report", {{"configuration", T::Object}, {"input", T::Array}, {"weight", T::Array}, {"guarantee", T::String}}},
    };
    return schemas;
}

/// Empty when the report matches its command's schema.
inline std::vector<std::string> report_schema_errors(const json& j) {
    std::vector<std::string> errs;
    if (!j.is_object()) return {"report is not an object"};
    for (const char* k : {"command", "model", "summary"})
        if (!j.contains(k) || !j[k].is_string()) errs.push_back(std::string("missing string field '") + k + "'");
    if (!errs.empty()) return errs;
    auto it = report_schemas().find(j["command"].get<std::string>());
    if (it == report_schemas().end()) return {"unknown command '" + j["command"].get<std::string>() + "'"};
    for (const FieldSpec& f : it->second) {
        if (!j.contains(f.name)) {
            errs.push_back("missing field '" + f.name + "'");
            continue;
        }
        const json& v = j[f.name];
        bool ok = true;
        switch (f.type) {
            case JsonType::Any: break;
            case JsonType::String: ok = v.is_string(); break;
            case JsonType::Bool: ok = v.is_boolean(); break;
            case JsonType::Integer: ok = v.is_number_integer(); break;
            case JsonType::Array: ok = v.is_array(); break;
            case JsonType::Object: ok = v.is_object(); break;
            case JsonType::Nullable: ok = v.is_null() || v.is_number_integer(); break;
        }
        if (!ok) errs.push_back("field '" + f.name + "' has the wrong type");
    }
    return errs;
}

}  // namespace mukai
