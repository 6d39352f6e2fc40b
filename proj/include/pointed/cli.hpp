#pragma once

// Command-line surface: build-algebra, check, verify-theorem. Every command prints one
// JSON document on stdout; failures print {"error": {"code", "message"}}.
//
// Exit codes: 0 ok, 1 a check failed, 2 validation/usage, 3 budget, 4 cap or internal.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pointed/deform.hpp"

namespace pointed::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

// ---------------------------------------------------------------------------
// Serialization

inline Json to_json(const SparseVec& v) {
    Json out = Json::array();
    for (const auto& [k, c] : v) out.push_back({k, c.to_string()});
    return out;
}

inline Json to_json(const Witness& w) { return {{"indices", w.indices}, {"lhs", w.lhs}, {"rhs", w.rhs}}; }

inline Json to_json(const AxiomResult& r) {
    Json j{{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

inline Json to_json(const RelationResult& r) {
    return {{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}};
}

inline Json summary(const BosonHopf& A) {
    const Nichols& N = A.nichols();
    Json mod = Json::array();
    for (const auto& l : A.module().labels()) mod.push_back(l);
    return {{"group", A.group().name()},
            {"group_order", A.group().order()},
            {"module", mod},
            {"nichols_dim", N.dim()},
            {"hilbert_series", N.hilbert_series()},
            {"finite", N.finite()},
            {"cap", A.cap()},
            {"dim", A.dim()}};
}

/// Full structure tables: basis labels, product, coproduct, counit, antipode (uncapped only).
inline Json tables(const BosonHopf& A) {
    Json basis = Json::array(), product = Json::array(), coproduct = Json::array(), counit = Json::array();
    for (int a = 0; a < A.dim(); ++a) {
        basis.push_back({{"index", a}, {"label", A.label(a)}, {"degree", A.degree(a)}});
        Json terms = Json::array();
        Key n = A.dim();
        for (const auto& [k, c] : A.coproduct(a)) terms.push_back({k / n, k % n, c.to_string()});
        coproduct.push_back(terms);
        counit.push_back(A.counit(a).to_string());
        for (int b = 0; b < A.dim(); ++b)
            if (A.product_defined(a, b) && !A.product(a, b).empty()) product.push_back({a, b, to_json(A.product(a, b))});
    }
    Json out{{"basis", basis}, {"product", product}, {"coproduct", coproduct}, {"counit", counit}};
    if (!A.capped()) {
        Json s = Json::array();
        for (int a = 0; a < A.dim(); ++a) s.push_back(to_json(A.antipode(a)));
        out["antipode"] = s;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Instances

struct InstanceArgs {
    std::string group;
    std::vector<std::string> modules;  // ik:i,k or ell:l
    std::string I, L;                  // "1,6;3,6" and "3;5"
    int m = 0;
    std::string rack;
    int n = 0;
    int cap = -1;
    int threads = 1;
};

struct Instance {
    ModulePtr V;
    BosonPtr A;  // null when only the module was asked for
    Json description;
    bool dihedral = false;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("bad_argument", "cannot read " + what + " from '" + s + "'");
    }
}

inline std::vector<Scalar> parse_scalars(const std::string& s, std::size_t expect, const std::string& what) {
    std::vector<Scalar> out;
    for (const auto& t : split(s, ',')) out.emplace_back(Rational::parse(t));
    if (out.size() != expect)
        throw ValidationError("bad_argument", what + " takes " + std::to_string(expect) + " comma-separated values");
    return out;
}

inline std::vector<std::pair<int, int>> parse_pairs(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : split(s, ';')) {
        auto xs = split(p, ',');
        if (xs.size() != 2) throw ValidationError("bad_argument", "index pair '" + p + "' must look like i,k");
        out.emplace_back(parse_int(xs[0], "i"), parse_int(xs[1], "k"));
    }
    return out;
}

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& p : split(s, ';'))
        for (const auto& x : split(p, ',')) out.push_back(parse_int(x, "l"));
    return out;
}

inline Instance build_module(const InstanceArgs& a) {
    Instance inst;
    if (!a.rack.empty()) {
        GroupPtr G;
        if (!a.group.empty()) {
            G = parse_group(a.group);
        } else if (a.n > 0) {
            G = symmetric(a.n);
        } else {
            throw ValidationError("missing_group", "a rack needs --group sym:n or --n");
        }
        inst.V = std::make_shared<const YDModule>(rack_module(parse_rack(G, a.rack)));
        inst.description = {{"group", G->name()}, {"rack", a.rack}, {"cap", a.cap}};
        return inst;
    }
    GroupPtr G;
    if (!a.group.empty()) {
        G = parse_group(a.group);
    } else if (a.m > 0) {
        G = dihedral(a.m);
    } else {
        throw ValidationError("missing_group", "give --group, --m, or --rack with --n");
    }
    if (G->kind() != FinGroup::Kind::Dihedral) throw ValidationError("bad_module", "modules ik:/ell: need a dihedral group");
    int m = G->parameter();
    inst.dihedral = true;
    if (!a.I.empty() || !a.L.empty()) {
        DihedralIndexData d{m, parse_pairs(a.I), parse_ints(a.L)};
        inst.V = std::make_shared<const YDModule>(dihedral_module(G, d));
        inst.description = {{"group", G->name()}, {"I", a.I}, {"L", a.L}, {"cap", a.cap}};
        return inst;
    }
    if (a.modules.empty()) throw ValidationError("missing_module", "give --module, --I/--L or --rack");
    std::vector<YDModule> parts;
    for (const auto& spec : a.modules) {
        auto colon = spec.find(':');
        std::string kind = spec.substr(0, colon);
        std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
        if (kind == "ik") {
            auto p = parse_pairs(rest);
            if (p.size() != 1) throw ValidationError("bad_module", "ik: takes one pair i,k");
            auto [i, k] = p.front();
            if (!in_J(m, i, k))
                throw ValidationError("not_in_J", "(" + std::to_string(i) + "," + std::to_string(k) +
                                                      ") is not in J: need 1 <= i < n, 1 <= k < m and w^{ik} = -1");
            parts.push_back(module_M_ik(G, i, k));
        } else if (kind == "ell") {
            parts.push_back(module_M_ell(G, parse_int(rest, "l")));
        } else {
            throw ValidationError("bad_module", "module must look like ik:i,k or ell:l");
        }
    }
    inst.V = std::make_shared<const YDModule>(parts.size() == 1 ? parts.front() : direct_sum(parts));
    inst.description = {{"group", G->name()}, {"modules", a.modules}, {"cap", a.cap}};
    return inst;
}

inline Instance build_instance(const InstanceArgs& a) {
    Instance inst = build_module(a);
    Nichols::Options opt;
    opt.cap = a.cap;
    opt.threads = std::max(1, a.threads);
    inst.A = bosonize(std::make_shared<const Nichols>(inst.V, opt));
    inst.V = inst.A->nichols().module_ptr();
    return inst;
}

inline Json module_summary(const YDModule& V) {
    Json mod = Json::array();
    for (const auto& l : V.labels()) mod.push_back(l);
    return {{"group", V.G().name()}, {"group_order", V.G().order()}, {"module", mod}, {"dim", V.dim()}};
}

// ---------------------------------------------------------------------------
// Forms

struct FormArgs {
    std::string alpha;  // rr,rs for the M_I block
    std::string theta;  // beta^{rr},beta^{rs}
    std::string zeta;   // zeta^{rr},zeta^{rs}
    std::string xi;     // xi^{12}
    std::string beta;   // rack class values: id,3-cycle[,(2,2)]
    std::string lambda; // rack constant form lambda/3
    bool random = false;
    bool break_invariance = false;
    unsigned long long seed = 1;
};

inline bool any_form(const FormArgs& f) {
    return !f.alpha.empty() || !f.theta.empty() || !f.zeta.empty() || !f.xi.empty() || !f.beta.empty() ||
           !f.lambda.empty() || f.random;
}

/// Fills the dihedral coefficient families, keeping only the entries allowed by the
/// congruences (so the form is invariant unless break_invariance is set).
inline void fill_dihedral(DihedralForm& f, const FormArgs& a) {
    int m = f.m();
    auto mod = [m](long long v) { return static_cast<int>(((v % m) + m) % m); };
    if (!a.alpha.empty()) {
        auto v = parse_scalars(a.alpha, 2, "--alpha");
        for (std::size_t s = 0; s < f.I().size(); ++s)
            for (std::size_t t = 0; t < f.I().size(); ++t) {
                int q = f.I()[s].k, k = f.I()[t].k;
                for (int r = 1; r <= 2; ++r)
                    for (int u = 1; u <= 2; ++u) {
                        bool diag = r == u;
                        if (diag && mod(q + k) == 0) f.alpha(s, r, t, u, v[0]);
                        if (!diag && mod(q - k) == 0) f.alpha(s, r, t, u, v[1]);
                    }
            }
    }
    auto mixed = [&](const std::string& text, const char* name, bool is_zeta) {
        if (text.empty()) return;
        auto v = parse_scalars(text, 2, name);
        for (std::size_t s = 0; s < f.I().size(); ++s)
            for (std::size_t l = 0; l < f.L().size(); ++l) {
                int q = f.I()[s].k, ell = f.L()[l].ell;
                for (int r = 1; r <= 2; ++r)
                    for (int u = 1; u <= 2; ++u) {
                        bool diag = r == u;
                        Scalar val;
                        if (diag && mod(q + ell) == 0) val = v[0];
                        if (!diag && mod(q - ell) == 0) val = v[1];
                        if (val.is_zero()) continue;
                        if (is_zeta) {
                            f.zeta(s, r, l, u, val);
                        } else {
                            f.beta(s, r, l, u, val);
                        }
                    }
            }
    };
    mixed(a.theta, "--theta", false);
    mixed(a.zeta, "--zeta", true);
    if (!a.xi.empty()) {
        auto v = parse_scalars(a.xi, 1, "--xi");
        for (std::size_t l = 0; l < f.L().size(); ++l)
            for (std::size_t l2 = 0; l2 < f.L().size(); ++l2)
                if (f.L()[l].ell == f.L()[l2].ell) {
                    f.xi(l, 1, l2, 2, v[0]);
                    f.xi(l, 2, l2, 1, v[0]);
                }
    }
    if (a.break_invariance) {
        if (!f.I().empty()) {
            f.alpha(0, 1, 0, 1, f.alpha(0, 1, 0, 1) + Scalar(1));
        } else if (!f.L().empty()) {
            f.xi(0, 1, 0, 1, Scalar(1));
        }
    }
}

inline BilinearForm build_form(const Instance& inst, const FormArgs& a) {
    ModulePtr V = inst.V;
    if (a.random) {
        std::mt19937_64 rng(a.seed);
        BilinearForm f = random_invariant_form(V, rng);
        if (a.break_invariance) f.set(0, 0, f(0, 0) + Scalar(1));
        return f;
    }
    if (inst.dihedral) {
        if (!a.beta.empty() || !a.lambda.empty())
            throw ValidationError("bad_argument", "--beta/--lambda describe rack forms; use --alpha/--theta/--zeta/--xi");
        DihedralForm f(V);
        fill_dihedral(f, a);
        return f.form();
    }
    if (!a.alpha.empty() || !a.theta.empty() || !a.zeta.empty() || !a.xi.empty())
        throw ValidationError("bad_argument", "--alpha/--theta/--zeta/--xi describe dihedral forms; use --beta or --lambda");
    BilinearForm f(V);
    if (!a.lambda.empty()) {
        f = constant_form(V, Scalar(Rational::parse(a.lambda)) / Scalar(3));
    } else if (!a.beta.empty()) {
        auto v = split(a.beta, ',');
        if (v.size() < 2 || v.size() > 3) throw ValidationError("bad_argument", "--beta takes 2 or 3 class values");
        Scalar v22 = v.size() == 3 ? Scalar(Rational::parse(v[2])) : Scalar();
        f = rack_class_form(V, Scalar(Rational::parse(v[0])), Scalar(Rational::parse(v[1])), v22);
    }
    if (a.break_invariance) f.set(0, 0, f(0, 0) + Scalar(1));
    return f;
}

// ---------------------------------------------------------------------------
// Commands

inline Json run_check(const std::string& what, const Instance& inst, const FormArgs& fa, int threads, bool& pass) {
    Json out{{"command", "check"}, {"check", what}, {"instance", inst.description}};
    if (inst.A) {
        out["algebra"] = summary(*inst.A);
    } else {
        out["module"] = module_summary(*inst.V);
    }
    std::vector<AxiomResult> results;
    if (what == "hopf-axioms") {
        VerifyOptions vo;
        vo.threads = threads;
        for (auto& r : verify_hopf_axioms(*inst.A, vo).axioms) results.push_back(r);
    } else {
        BilinearForm eta = build_form(inst, fa);
        out["eta"] = eta.to_string();
        if (what == "invariance") {
            results.push_back(check_invariance(eta, true));
        } else if (what == "eq12") {
            auto r = check_eq1_eq2(eta);
            results.push_back(r.eq1);
            results.push_back(r.eq2);
        } else if (what == "hochschild") {
            auto f = lift_functional(eta, inst.A);
            results.push_back(check_vanishing_on_coradical(f));
            results.push_back(check_hochschild(f));
        } else if (what == "mult-cocycle") {
            auto f = lift_functional(eta, inst.A);
            auto s = exponential(f), si = exponential(scale(f, Scalar(-1)));
            results.push_back(check_convolution_inverse(s, si));
            TripleDomain dom;
            dom.nichols_only = inst.A->capped();
            auto r = check_multiplicative_cocycle(s, nullptr, dom);
            results.push_back(r.normalization);
            results.push_back(r.cocycle);
        } else if (what == "commuting") {
            auto f = lift_functional(eta, inst.A);
            TripleDomain dom;
            dom.nichols_only = inst.A->capped();
            auto r = check_commuting_conditions(f, dom);
            results.push_back(r.b);
            results.push_back(r.c);
        } else {
            throw ValidationError("bad_check", "unknown check '" + what + "'");
        }
    }
    pass = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        pass = pass && r.pass;
        arr.push_back(to_json(r));
    }
    out["results"] = arr;
    out["overall"] = pass;
    return out;
}

inline Json theorem_json(const TheoremReport& r, const Json& instance) {
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    Json rels = Json::array(), checks = Json::array();
    for (const auto& x : r.relations) rels.push_back(to_json(x));
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"theorem", r.name}, {"instance", instance}, {"parameters", params},
            {"relations", rels}, {"checks", checks}, {"overall", r.pass()}};
}

inline Json run_theorem(const std::string& name, const InstanceArgs& ia, const FormArgs& fa, int range, bool& pass) {
    if (name == "AI" || name == "BIL") {
        int m = ia.m > 0 ? ia.m : 12;
        DihedralIndexData d{m, parse_pairs(ia.I), parse_ints(ia.L)};
        auto fill = [&](DihedralForm& f) { fill_dihedral(f, fa); };
        DihedralTheoremOptions opt;
        opt.cocycle_check = false;
        TheoremReport r = name == "AI" ? verify_theorem_AI(d, fill, opt) : verify_theorem_BIL(d, fill, opt);
        pass = r.pass();
        return theorem_json(r, {{"m", m}, {"I", ia.I}, {"L", ia.L}});
    }
    if (name == "S3" || name == "Q3" || name == "Q4" || name == "D4") {
        std::string fam = name == "S3" ? "Q3" : name;
        Scalar lambda(Rational::parse(fa.lambda.empty() ? "1" : fa.lambda));
        RackTheoremOptions opt;
        opt.cap = ia.cap;
        TheoremReport r = verify_theorem_rack(fam, lambda, opt);
        pass = r.pass();
        return theorem_json(r, {{"family", fam}, {"cap", fam == "Q3" ? ia.cap : (ia.cap < 0 ? 2 : ia.cap)}});
    }
    if (name == "chi-scan") {
        int n = ia.n > 0 ? ia.n : 4;
        auto r = chi_triviality_scan(n, range, ia.cap < 0 ? 2 : ia.cap);
        pass = r.pass();
        Json j{{"theorem", "chi-scan"},
               {"instance", {{"n", n}, {"range", range}}},
               {"invariant_dim", r.invariant_dim},
               {"pair_orbits", r.pair_orbits},
               {"grid_points", r.grid_points},
               {"survivors", r.survivors},
               {"nonzero_survivors", r.nonzero_survivors},
               {"nontrivial_deformations", r.nontrivial_deformations},
               {"overall", pass}};
        if (r.witness) j["witness"] = *r.witness;
        return j;
    }
    throw ValidationError("bad_theorem", "unknown theorem '" + name + "' (AI, BIL, S3, Q4, D4, chi-scan)");
}

inline Json error_json(const std::string& code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

/// Runs the CLI; JSON goes to out, the return value is the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Pointed Hopf algebras: Nichols algebras, bosonizations and cocycle deformations"};
    app.require_subcommand(1);

    InstanceArgs ia;
    FormArgs fa;
    std::string output, check_name, theorem_name;
    int range = 2;

    auto add_instance = [&](CLI::App* c) {
        c->add_option("--group", ia.group, "dihedral:m or sym:n");
        c->add_option("--module", ia.modules, "ik:i,k or ell:l (repeatable)");
        c->add_option("--I", ia.I, "index pairs, e.g. 1,6;3,6");
        c->add_option("--L", ia.L, "odd l values, e.g. 3");
        c->add_option("--m", ia.m, "dihedral parameter m");
        c->add_option("--rack", ia.rack, "o2:-1, o2:chi or o4:-1");
        c->add_option("--n", ia.n, "symmetric group S_n for --rack");
        c->add_option("--cap", ia.cap, "truncate the Nichols algebra at this degree");
        c->add_option("--threads", ia.threads, "worker threads");
    };
    auto add_form = [&](CLI::App* c) {
        c->add_option("--alpha", fa.alpha, "alpha^{rr},alpha^{rs}");
        c->add_option("--theta", fa.theta, "beta^{rr},beta^{rs} (M_I against M_L)");
        c->add_option("--zeta", fa.zeta, "zeta^{rr},zeta^{rs} (M_L against M_I)");
        c->add_option("--xi", fa.xi, "xi^{12} (M_L against M_L)");
        c->add_option("--beta", fa.beta, "rack class values: id,3-cycle[,(2,2)]");
        c->add_option("--lambda", fa.lambda, "rack constant form lambda/3");
        c->add_flag("--random", fa.random, "random invariant form");
        c->add_option("--seed", fa.seed, "seed for --random");
        c->add_flag("--break-invariance", fa.break_invariance, "perturb the form off the invariant subspace");
    };

    auto* build = app.add_subcommand("build-algebra", "build a bosonization and print its summary");
    add_instance(build);
    build->add_option("--output", output, "write the full structure tables as JSON");

    auto* check = app.add_subcommand("check", "run one family of checks");
    check->add_option("name", check_name, "hopf-axioms | invariance | eq12 | hochschild | mult-cocycle | commuting")
        ->required();
    add_instance(check);
    add_form(check);

    auto* verify = app.add_subcommand("verify-theorem", "verify the relations of a deformed family");
    verify->add_option("name", theorem_name, "AI | BIL | S3 | Q4 | D4 | chi-scan")->required();
    add_instance(verify);
    add_form(verify);
    verify->add_option("--range", range, "coefficient range for chi-scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        out << error_json("usage", e.what()).dump(2) << "\n";
        return kExitValidation;
    }

    try {
        bool pass = true;
        Json result;
        if (*build) {
            Instance inst = build_instance(ia);
            result = {{"command", "build-algebra"}, {"instance", inst.description}, {"algebra", summary(*inst.A)}};
            if (!output.empty()) {
                std::ofstream f(output);
                if (!f) throw ValidationError("bad_output", "cannot write " + output);
                f << tables(*inst.A).dump() << "\n";
                result["output"] = output;
            }
        } else if (*check) {
            bool module_only = check_name == "invariance" || check_name == "eq12";
            Instance inst = module_only ? build_module(ia) : build_instance(ia);
            result = run_check(check_name, inst, fa, ia.threads, pass);
        } else {
            result = run_theorem(theorem_name, ia, fa, range, pass);
        }
        out << result.dump(2) << "\n";
        return pass ? kExitOk : kExitFailed;
    } catch (const ValidationError& e) {
        out << error_json(e.code(), e.what()).dump(2) << "\n";
        return kExitValidation;
    } catch (const ResourceError& e) {
        out << error_json(e.code(), e.what()).dump(2) << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        out << error_json(e.code(), e.what()).dump(2) << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        out << error_json("internal", e.what()).dump(2) << "\n";
        return kExitInternal;
    }
}

}  // namespace pointed::cli
