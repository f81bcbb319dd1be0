// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief The mukai-kit command line: model queries and verification suites.
 *
 * Exit codes: 0 success or verified, 1 verified negative (empty moduli,
 * failed relation, ...), 2 usage or configuration error.
 */

#pragma once

#include "mukai/models.hpp"
#include "mukai/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>

namespace mukai {

namespace cli_detail {

constexpr std::uint64_t kDefaultSeed = 20240607;

inline std::uint64_t seed_from_env() {
    const char* s = std::getenv("MUKAI_KIT_SEED");
    if (!s || !*s) return kDefaultSeed;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != std::string(s).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(0, "MUKAI_KIT_SEED", "expected an unsigned integer, got '" + std::string(s) + "'");
    }
}

inline std::size_t root_index(const std::string& text, const RootConfiguration& S) {
    for (std::size_t i = 0; i < S.names.size(); ++i)
        if (S.names[i] == text) return i;
    auto v = config_detail::parse_int(text);
    if (!v || *v < 0 || static_cast<std::size_t>(*v) >= S.size())
        throw PreconditionError("no root named or numbered '" + text + "'");
    return static_cast<std::size_t>(*v);
}

inline CartanType affine_type(const std::string& text) {
    CartanType t = parse_cartan_type(text);
    t.affine = true;
    return t;
}

inline void render_text(const json& j, std::ostream& out) {
    out << j["summary"].get<std::string>() << "\n";
    for (const auto& [k, v] : j.items()) {
        if (k == "summary") continue;
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

struct Context {
    std::string model_name;
    std::optional<ModelSpec> spec;
    std::optional<RootConfiguration> config;

    const ModelSpec& model() {
        if (!spec) spec = resolve_model(model_name);
        return *spec;
    }
    const RootConfiguration& configuration() {
        if (!config) config = build_configuration(model());
        return *config;
    }
    IntVec root_vector(const std::string& text) {
        const ModelSpec& m = model();
        return parse_ambient_vector(text, m.root_kind, m.surface);
    }
};

}  // namespace cli_detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Root configurations, Lie algebra checks and moduli invariants for sheaves on surfaces",
                 "mukai-kit"};
    app.require_subcommand(1);
    std::string model_opt, format = "text";
    app.add_option("--model", model_opt, "built-in model name or model file");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    std::string v_text, i_text, type_text, kind_text = "rdp", D_text, c1_text, xi_text;
    Int n_val = 0, d_val = 0, chi_val = 0, rank_val = 0, r_val = 1, loop = 2;
    std::size_t limit = 100000, trials = 100, samples = 2000;

    CLI::App* c_classify = sub("classify", "classify the root configuration of a model");
    CLI::App* c_reflect = sub("reflect", "reflect a vector in a simple root");
    c_reflect->add_option("--v", v_text, "vector")->required();
    c_reflect->add_option("--i", i_text, "root index or name")->required();
    CLI::App* c_reduce = sub("reduce", "reduce a vector to the dominant chamber");
    c_reduce->add_option("--v", v_text, "vector")->required();
    CLI::App* c_orbit = sub("orbit", "list a finite Weyl orbit");
    c_orbit->add_option("--v", v_text, "vector")->required();
    c_orbit->add_option("--limit", limit, "maximal orbit size");
    CLI::App* c_exists = sub("exists", "existence and invariants of M_H(v) on a K3-type surface");
    c_exists->add_option("--v", v_text, "Mukai vector 'r | c1 | a'")->required();
    CLI::App* c_dim = sub("dim", "dimension of M_H(v)");
    c_dim->add_option("--v", v_text, "Mukai vector 'r | c1 | a' (K3) or 'r | c1 | chi'")->required();
    CLI::App* c_poincare = sub("poincare", "Betti numbers of K3 moduli");
    c_poincare->add_option("--n", n_val, "Hilbert scheme length");
    c_poincare->add_option("--v", v_text, "Mukai vector");
    CLI::App* c_bset = sub("bset", "enumerate B_(xi, d)");
    c_bset->add_option("--xi", xi_text, "ambient vector")->required();
    c_bset->add_option("--d", d_val, "bound")->required();
    CLI::App* c_vlie = sub("verify-lie", "check the Chevalley relations");
    c_vlie->add_option("--type", type_text, "Cartan type, e.g. E8 or E8affine");
    c_vlie->add_option("--loop", loop, "loop degree bound for the affine Jacobi sample");
    c_vlie->add_option("--samples", samples, "random triples for Jacobi sampling");
    CLI::App* c_vmod = sub("verify-module", "check an RDP or elliptic-fiber module");
    c_vmod->add_option("--kind", kind_text, "rdp or fiber")->check(CLI::IsMember({"rdp", "fiber"}));
    c_vmod->add_option("--type", type_text, "Cartan type");
    c_vmod->add_option("--loop", loop, "loop range");
    CLI::App* c_vweyl = sub("verify-weyl", "Weyl invariance of K3 Betti numbers");
    c_vweyl->add_option("--v", v_text, "vector")->required();
    c_vweyl->add_option("--trials", trials, "number of random words");
    CLI::App* c_ell = sub("elliptic-exists", "existence on a rational elliptic surface");
    c_ell->add_option("--D", D_text, "rank 0: first Chern class");
    c_ell->add_option("--chi", chi_val, "Euler characteristic");
    c_ell->add_option("--rank", rank_val, "torsion free: rank of F");
    c_ell->add_option("--c1", c1_text, "torsion free: c1(F)");
    c_ell->add_option("--r", r_val, "torsion free: rank of E_D");
    c_ell->add_option("--d", d_val, "torsion free: fiber degree of E_D");
    CLI::App* c_report = sub("report", "full report for one vector");
    c_report->add_option("--v", v_text, "vector")->required();

    std::vector<std::string> argv_store{"mukai-kit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    const std::string default_model =
        name == "elliptic-exists" ? "rational-elliptic-e8" : "k3-example1";
    Context ctx{model_opt.empty() ? default_model : model_opt, {}, {}};

    json j;
    int code = 0;
    try {
        j["command"] = name;
        j["model"] = ctx.model_name;

        if (cmd == c_classify) {
            const auto& S = ctx.configuration();
            j["configuration"] = to_json(S);
            j["summary"] = S.kind_string();
        } else if (cmd == c_reflect) {
            const auto& S = ctx.configuration();
            IntVec x = ctx.root_vector(v_text);
            std::size_t i = root_index(i_text, S);
            IntVec y = reflect(i, x, S);
            j["input"] = x;
            j["index"] = i;
            j["result"] = y;
            j["summary"] = to_string(y);
        } else if (cmd == c_reduce) {
            const auto& S = ctx.configuration();
            IntVec x = ctx.root_vector(v_text);
            Reduction r = reduce_to_dominant(x, S);
            j["input"] = x;
            j["representative"] = r.representative;
            j["word"] = r.word;
            j["summary"] = to_string(r.representative);
        } else if (cmd == c_orbit) {
            const auto& S = ctx.configuration();
            IntVec x = ctx.root_vector(v_text);
            auto orb = weyl_orbit(x, S, limit);
            j["input"] = x;
            j["orbit"] = orb;
            j["size"] = orb.size();
            j["summary"] = "orbit of size " + std::to_string(orb.size());
        } else if (cmd == c_exists) {
            const ModelSpec& m = ctx.model();
            Ambient amb = Ambient::of(VectorKind::Mukai, m.surface);
            MukaiVector v = amb.to_mukai(parse_ambient_vector(v_text, VectorKind::Mukai, m.surface));
            ModuliDescriptor d = describe_k3(v, m.surface, m.twist, m.polarization);
            j["descriptor"] = to_json(d);
            j["summary"] = d.exists ? "nonempty" : "empty";
            code = d.exists ? 0 : 1;
        } else if (cmd == c_dim) {
            const ModelSpec& m = ctx.model();
            const SurfaceModel& X = m.surface;
            if (X.k_trivial) {
                Ambient amb = Ambient::of(VectorKind::Mukai, X);
                IntVec x = parse_ambient_vector(v_text, VectorKind::Mukai, X);
                auto dim = k3_dimension(amb.to_mukai(x), X);
                j["input"] = x;
                j["method"] = "k3";
                j["exists"] = dim.has_value();
                j["dimension"] = dim ? json(*dim) : json(nullptr);
                j["summary"] = dim ? "dimension " + std::to_string(*dim) : "empty";
                code = dim ? 0 : 1;
            } else {
                auto parts = config_detail::split(v_text, '|');
                if (parts.size() != 3) throw PreconditionError("expected 'r | c1 | chi'");
                auto r = config_detail::parse_int(parts[0]);
                auto chi = config_detail::parse_int(parts[2]);
                if (!r || !chi) throw PreconditionError("r and chi must be integers");
                GammaVector g{*r, parse_class(parts[1], X), *chi};
                Int e = expected_dim(g, X);
                j["input"] = gamma_coords(g);
                j["method"] = "expected";
                j["exists"] = nullptr;
                j["dimension"] = e;
                j["summary"] = "expected dimension " + std::to_string(e);
            }
        } else if (cmd == c_poincare) {
            Int n = n_val;
            if (!v_text.empty()) {
                const ModelSpec& m = ctx.model();
                Ambient amb = Ambient::of(VectorKind::Mukai, m.surface);
                Int s = k3_self_pairing(amb.to_mukai(parse_ambient_vector(v_text, VectorKind::Mukai, m.surface)),
                                        m.surface);
                if (s < -2) throw PreconditionError("<v^2> < -2: the moduli space is empty");
                n = s / 2 + 1;
            }
            Polynomial p = GottscheTable::instance().coefficient(n);
            j["n"] = n;
            j["poincare"] = p;
            j["euler"] = evaluate_at_one(p);
            j["summary"] = to_string(p);
        } else if (cmd == c_bset) {
            const auto& S = ctx.configuration();
            IntVec xi = ctx.root_vector(xi_text);
            auto elems = enumerate_B(xi, d_val, S);
            j["xi"] = xi;
            j["d"] = d_val;
            j["elements"] = elems;
            j["count"] = elems.size();
            j["summary"] = std::to_string(elems.size()) + " elements";
        } else if (cmd == c_vlie) {
            const std::uint64_t seed = seed_from_env();
            IntMatrix finite;
            bool affine = false;
            std::string label;
            ChevalleyReport chev;
            if (!type_text.empty()) {
                CartanType t = parse_cartan_type(type_text);
                affine = t.affine;
                label = t.label();
                t.affine = false;
                finite = finite_cartan(t);
            } else {
                const auto& S = ctx.configuration();
                if (S.kind == ConfigKind::Indefinite) throw PreconditionError("indefinite configuration");
                affine = S.kind == ConfigKind::Affine;
                label = S.label;
                finite = S.cartan.submatrix(S.finite_part());
            }
            auto g = std::make_shared<const FiniteLieAlgebra>(finite);
            j["type"] = label;
            j["dim"] = g->dim();
            bool pass;
            if (!affine) {
                chev = type_text.empty() ? verify_chevalley(ctx.configuration(), *g) : verify_chevalley(*g);
                IdentityReport id = check_jacobi(*g, g->dim() > 80 ? samples : 0, seed);
                j["jacobi"] = to_json(id);
                pass = chev.all_pass() && id.pass();
            } else {
                AffineLieAlgebra aff = affine_realize(g, affine_extension(finite).marks);
                chev = type_text.empty() ? verify_chevalley(ctx.configuration(), *g) : verify_chevalley(aff);
                AffineReport ar = check_affine_identities(aff);
                IdentityReport id = check_loop_jacobi(aff, loop, samples, seed);
                j["affine"] = to_json(ar);
                j["loop_jacobi"] = to_json(id);
                j["loop"] = loop;
                pass = chev.all_pass() && ar.pass() && id.pass();
            }
            j["chevalley"] = to_json(chev);
            j["pass"] = pass;
            j["summary"] = label + (pass ? ": all relations pass" : ": relation failure");
            code = pass ? 0 : 1;
        } else if (cmd == c_vmod) {
            bool pass;
            if (kind_text == "rdp") {
                if (type_text.empty()) throw PreconditionError("--type is required for the RDP module");
                RootConfiguration S = build_configuration(rdp_germ(type_text));
                GradedModule M = rdp_adjoint_module(S);
                FiniteLieAlgebra g(S.cartan);
                const bool same = M.character() == adjoint_character(g);
                const auto bad = predicate_violations(M);
                j["module"] = to_json(M);
                j["character_matches"] = same;
                j["predicate_violations"] = bad;
                j["dim"] = g.dim();
                pass = same && bad.empty();
                j["model"] = "rdp-germ-" + S.label;
            } else {
                RootConfiguration S = type_text.empty()
                                          ? ctx.configuration()
                                          : build_configuration(k3_example1(affine_type(type_text).finite_label() + "affine", 1, 1));
                FiberModule F = affine_fiber_module(S, loop);
                FiniteLieAlgebra g(S.cartan.submatrix(S.finite_part()));
                const Int expected = static_cast<Int>(g.dim()) + 1;
                json degrees = json::array();
                bool totals = true;
                for (const FiberDegree& d : F.degrees) {
                    degrees.push_back({{"m", d.m}, {"total", d.total}, {"sub", d.sub}, {"quotient", d.quotient}});
                    totals = totals && d.total == expected && d.sub + d.quotient == d.total;
                }
                const auto bad = predicate_violations(F.module);
                j["module"] = to_json(F.module);
                j["degrees"] = degrees;
                j["expected_per_degree"] = expected;
                j["predicate_violations"] = bad;
                if (!type_text.empty()) j["model"] = "k3-example1:" + affine_type(type_text).finite_label() + "affine,r=1,a=1";
                pass = totals && bad.empty();
            }
            j["kind"] = kind_text;
            j["pass"] = pass;
            j["summary"] = kind_text + (pass ? " module verified" : " module check failed");
            code = pass ? 0 : 1;
        } else if (cmd == c_vweyl) {
            const auto& S = ctx.configuration();
            IntVec x = ctx.root_vector(v_text);
            WeylReport w = verify_weyl_invariance(x, S, trials, seed_from_env());
            j["input"] = x;
            j["reference"] = w.reference;
            j["words"] = w.words;
            j["failures"] = w.failures;
            j["pass"] = w.pass();
            j["summary"] = w.pass() ? "Betti numbers are Weyl invariant" : "Weyl invariance fails";
            code = w.pass() ? 0 : 1;
        } else if (cmd == c_ell) {
            const ModelSpec& m = ctx.model();
            RationalEllipticModel M = RationalEllipticModel::from(m.surface);
            if (!D_text.empty()) {
                if (!c1_text.empty() || rank_val != 0) throw PreconditionError("--D cannot be combined with --rank/--c1");
                IntVec D = parse_class(D_text, m.surface);
                Rank0Result r = exists_rank0(D, chi_val, M);
                j.update(to_json(r));
                j["query"] = {{"kind", "rank0"}, {"D", D}, {"chi", chi_val}};
                code = r.verdict == Verdict::Exists ? 0 : 1;
            } else if (!c1_text.empty()) {
                GammaVector F{rank_val, parse_class(c1_text, m.surface), chi_val};
                TorsionFreeResult r = exists_torsionfree(F, r_val, d_val, M);
                j.update(to_json(r));
                j["query"] = {{"kind", "torsion-free"}, {"gamma", to_json(F)}, {"r", r_val}, {"d", d_val}};
                code = r.verdict == Verdict::Exists ? 0 : 1;
            } else {
                throw PreconditionError("give --D (rank 0) or --rank/--c1 (torsion free)");
            }
            j["summary"] = j["verdict"];
        } else if (cmd == c_report) {
            const ModelSpec& m = ctx.model();
            const auto& S = ctx.configuration();
            IntVec x = ctx.root_vector(v_text);
            j["configuration"] = to_json(S);
            j["input"] = x;
            j["weight"] = weight(x, S);
            j["guarantee"] = to_string(division_guarantee(S, x));
            try {
                j["dominant"] = reduce_to_dominant(x, S).representative;
            } catch (const PreconditionError& e) {
                j["dominant"] = nullptr;
                j["dominant_error"] = e.what();
            }
            if (S.kind == ConfigKind::Affine) {
                j["d_eigenvalue"] = rational_string(d_eigenvalue(x, S));
                j["center_scalar"] = center_scalar_from_marks(x, S);
            }
            if (S.ambient.kind == VectorKind::Mukai) {
                ModuliDescriptor d = describe_k3(S.ambient.to_mukai(x), m.surface, m.twist, m.polarization);
                j["descriptor"] = to_json(d);
            }
            j["summary"] = S.kind_string() + ", weight " + to_string(weight(x, S));
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (format == "json") {
        out << j.dump(2) << "\n";
    } else {
        render_text(j, out);
    }
    return code;
}

}  // namespace mukai
