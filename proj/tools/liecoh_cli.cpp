// Command-line front end: validation, structure invariants, cohomology,
// classification and the identity/battery verifiers.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liecoh/liecoh.hpp"

namespace {

using namespace liecoh;
using io::json;

struct RunConfig {
    std::string format = "text";
    std::size_t degree = 0;
    std::size_t max_module_dim = 16;
    std::size_t max_degree = 3;
    std::vector<std::string> paths;
    std::string name;
    std::string module_name;
    std::string export_dir;
    bool adjoint = false;
};

enum Exit { ok = 0, invalid_input = 1, contract = 2 };

bool as_json(const RunConfig& cfg) { return cfg.format == "json"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

LieAlgebra load_algebra(const std::string& path) {
    auto l = io::read_algebra(path);
    require_valid(l);
    return l;
}

// Module file at paths[idx] if given; otherwise the adjoint module when
// --adjoint is set, else the trivial module K.
Representation load_module_or_default(const RunConfig& cfg, std::size_t idx, const LieAlgebra& l) {
    const auto& paths = cfg.paths;
    if (paths.size() <= idx) return cfg.adjoint ? adjoint(l) : trivial(l, 1);
    auto v = io::read_module(paths[idx], l);
    require_valid(v);
    return v;
}

json identity_json(const IdentityReport& r) {
    json terms = json::object();
    for (const auto& [name, value] : r.terms) terms[name] = value;
    return {{"holds", r.holds()}, {"identity", r.identity}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"terms", terms}};
}

void print_identity(const IdentityReport& r) {
    std::cout << r.identity << ": " << r.lhs << " = ";
    for (std::size_t i = 0; i < r.terms.size(); ++i)
        std::cout << (i ? " + " : "") << r.terms[i].second << " [" << r.terms[i].first << "]";
    std::cout << (r.holds() ? "  ok" : "  MISMATCH") << "\n";
}

int report_identities(const RunConfig& cfg, const std::vector<IdentityReport>& reports) {
    bool all = true;
    for (const auto& r : reports) all = all && r.holds();
    if (as_json(cfg)) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(identity_json(r));
        emit({{"all_hold", all}, {"reports", arr}});
    } else {
        for (const auto& r : reports) print_identity(r);
    }
    return all ? ok : contract;
}

int cmd_validate(const RunConfig& cfg) {
    auto l = io::read_algebra(cfg.paths.at(0));
    auto bad = validate(l);
    std::optional<CommutatorViolation> bad_rep;
    if (!bad && cfg.paths.size() > 1) bad_rep = validate_rep(io::read_module(cfg.paths[1], l));
    if (as_json(cfg)) {
        json j{{"ok", !bad && !bad_rep}};
        if (bad) j["jacobi_violation"] = {{"i", bad->i}, {"j", bad->j}, {"l", bad->l}, {"m", bad->m},
                                          {"value", to_string(bad->value)}};
        if (bad_rep) j["module_violation"] = {{"i", bad_rep->i}, {"j", bad_rep->j}};
        emit(j);
    } else if (bad) {
        std::cout << "Jacobi identity fails at (" << bad->i << ", " << bad->j << ", " << bad->l << "), coordinate "
                  << bad->m << ": " << to_string(bad->value) << "\n";
    } else if (bad_rep) {
        std::cout << "module action fails on the bracket of e" << bad_rep->i << " and e" << bad_rep->j << "\n";
    } else {
        std::cout << "ok\n";
    }
    return bad || bad_rep ? invalid_input : ok;
}

int cmd_invariants(const RunConfig& cfg) {
    auto l = load_algebra(cfg.paths.at(0));
    auto dims = [](const std::vector<Subspace>& s) {
        std::vector<std::size_t> d;
        for (const auto& x : s) d.push_back(x.dim());
        return d;
    };
    auto ds = dims(derived_series(l));
    auto lcs = dims(lower_central_series(l));
    auto det = determinant(killing(l));
    auto dec = levi(l);
    bool solvable = ds.back() == 0, nilpotent = lcs.back() == 0, semisimple = is_semisimple(l);
    if (as_json(cfg)) {
        emit({{"derived_series", ds},
              {"flags", {{"nilpotent", nilpotent}, {"semisimple", semisimple}, {"solvable", solvable}}},
              {"killing_det", to_string(det)},
              {"levi", io::subspace_json(dec.levi)},
              {"lower_central_series", lcs},
              {"name", l.name()},
              {"radical", io::subspace_json(dec.radical)}});
        return ok;
    }
    auto seq = [](const std::vector<std::size_t>& d) {
        std::ostringstream s;
        for (std::size_t i = 0; i < d.size(); ++i) s << (i ? " > " : "") << d[i];
        return s.str();
    };
    std::cout << l.name() << " (dim " << l.dim() << ")\n"
              << "  derived series dims:      " << seq(ds) << "\n"
              << "  lower central series dims: " << seq(lcs) << "\n"
              << "  det Killing form:         " << to_string(det) << "\n"
              << "  radical dim:              " << dec.radical.dim() << "\n"
              << "  Levi subalgebra dim:      " << dec.levi.dim() << "\n"
              << "  solvable " << solvable << ", nilpotent " << nilpotent << ", semisimple " << semisimple << "\n";
    return ok;
}

int cmd_cohomology(const RunConfig& cfg) {
    auto l = load_algebra(cfg.paths.at(0));
    auto v = load_module_or_default(cfg, 1, l);
    require(cfg.degree <= l.dim(), "degree " + std::to_string(cfg.degree) + " exceeds the algebra dimension");
    auto h = cohomology(l, v, cfg.degree);
    if (as_json(cfg)) {
        json reps = json::array();
        for (const auto& r : h.representatives) reps.push_back(io::cocycle_json(r));
        emit({{"degree", h.degree}, {"dim_B", h.dim_B}, {"dim_H", h.dim_H}, {"dim_Z", h.dim_Z},
              {"representatives", reps}});
    } else {
        std::cout << "H^" << h.degree << ": dim " << h.dim_H << "  (dim Z = " << h.dim_Z << ", dim B = " << h.dim_B
                  << ")\n";
    }
    return ok;
}

int cmd_classify(const RunConfig& cfg) {
    auto l = load_algebra(cfg.paths.at(0));
    auto verdict = classify(l);
    if (as_json(cfg)) {
        emit(io::verdict_json(verdict));
        return ok;
    }
    std::cout << l.name() << ": " << to_string(verdict.kind) << "\n";
    if (verdict.decomposition)
        std::cout << "  semisimple part dim " << verdict.decomposition->semisimple.dim() << ", plus a line\n";
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        std::cout << "  witness module dim " << w.module.dim << ", dim H^2(L,V) = " << w.h2_dim << ", via "
                  << to_string(w.provenance) << " (certificate verified)\n";
    }
    return ok;
}

int cmd_verify_dixmier(const RunConfig& cfg) {
    auto l = load_algebra(cfg.paths.at(0));
    auto v = load_module_or_default(cfg, 1, l);
    auto c1 = codim1_ideal_containing_derived(l);
    require(c1.has_value(), "algebra is perfect; it has no codimension-one ideal");
    std::vector<IdentityReport> reports;
    for (std::size_t n = 1; n <= std::min(cfg.max_degree, l.dim()); ++n)
        reports.push_back(verify_dixmier(l, c1->ideal, c1->x, v, n));
    return report_identities(cfg, reports);
}

int cmd_verify_hs(const RunConfig& cfg) {
    auto l = load_algebra(cfg.paths.at(0));
    auto v = load_module_or_default(cfg, 1, l);
    auto dec = levi(l);
    return report_identities(cfg, {verify_hs_degeneration(l, dec.levi, dec.radical, v)});
}

int cmd_verify_kunneth(const RunConfig& cfg) {
    require(cfg.paths.size() == 2 || cfg.paths.size() == 4, "kunneth takes A B [VA VB]");
    auto a = load_algebra(cfg.paths[0]);
    auto b = load_algebra(cfg.paths[1]);
    auto va = cfg.paths.size() == 4 ? io::read_module(cfg.paths[2], a) : trivial(a, 1);
    auto vb = cfg.paths.size() == 4 ? io::read_module(cfg.paths[3], b) : trivial(b, 1);
    require_valid(va);
    require_valid(vb);
    std::vector<IdentityReport> reports;
    for (std::size_t n = 0; n <= cfg.max_degree; ++n) reports.push_back(verify_kunneth(a, b, va, vb, n));
    return report_identities(cfg, reports);
}

int cmd_verify_whitehead(const RunConfig& cfg) {
    auto l = load_algebra(cfg.paths.at(0));
    std::vector<LabeledModule> seeds;
    for (std::size_t i = 1; i < cfg.paths.size(); ++i) {
        auto v = io::read_module(cfg.paths[i], l);
        require_valid(v);
        seeds.push_back({std::filesystem::path(cfg.paths[i]).stem().string(), v});
    }
    BatteryConfig bc;
    bc.max_module_dim = cfg.max_module_dim;
    auto rep = whitehead_battery(l, seeds, bc);
    if (as_json(cfg)) {
        json rows = json::array();
        for (const auto& r : rep.rows) rows.push_back({{"dim", r.dim}, {"h1", r.h1}, {"h2", r.h2}, {"module", r.label}});
        emit({{"all_zero", rep.all_zero()}, {"modules", rows}});
    } else {
        for (const auto& r : rep.rows)
            std::cout << "  dim " << r.dim << "  H1 " << r.h1 << "  H2 " << r.h2 << "  " << r.label << "\n";
        std::cout << rep.rows.size() << " modules, " << (rep.all_zero() ? "all H1 = H2 = 0" : "NONZERO cohomology")
                  << "\n";
    }
    return rep.all_zero() ? ok : contract;
}

int cmd_verify_nilpotent(const RunConfig& cfg) {
    auto l = load_algebra(cfg.paths.at(0));
    auto rep = check_nilpotent_h2(l);
    if (as_json(cfg)) {
        emit({{"at_least_two", rep.at_least_two}, {"dims", rep.dims}, {"h2", rep.h2}});
    } else {
        std::cout << "dim H^2(L,K) = " << rep.h2 << "\n";
        for (std::size_t n = 0; n < rep.dims.size(); ++n)
            std::cout << "  H^" << n << ": " << rep.dims[n]
                      << (n > 0 ? (rep.at_least_two[n - 1] ? "  (>= 2)" : "  (< 2)") : "") << "\n";
    }
    return ok;
}

int cmd_catalog_list(const RunConfig& cfg) {
    auto names = catalog::list();
    if (as_json(cfg)) {
        emit(names);
    } else {
        for (const auto& n : names) std::cout << n << "\n";
    }
    return ok;
}

int cmd_catalog_show(const RunConfig& cfg) {
    auto e = catalog::get(cfg.name);
    if (cfg.module_name.empty()) {
        emit(io::algebra_json(e.algebra));
        return ok;
    }
    for (const auto& [name, m] : e.modules)
        if (name == cfg.module_name) {
            emit(io::module_json(m));
            return ok;
        }
    throw InvalidInput("catalog entry '" + cfg.name + "' has no module '" + cfg.module_name + "'");
}

int cmd_catalog_export(const RunConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.export_dir);
    for (const auto& name : catalog::list()) {
        auto e = catalog::get(name);
        std::ofstream(fs::path(cfg.export_dir) / (name + ".json")) << io::algebra_json(e.algebra).dump(2) << "\n";
        for (const auto& [mname, m] : e.modules)
            std::ofstream(fs::path(cfg.export_dir) / (name + "." + mname + ".module.json"))
                << io::module_json(m).dump(2) << "\n";
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lie algebra cohomology and 2-triviality certificates"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int(const RunConfig&)> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto bind = [&](CLI::App* sub, int (*fn)(const RunConfig&)) { sub->callback([&, fn] { action = fn; }); };

    auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry/Jacobi (and a module, if given)");
    validate_cmd->add_option("files", cfg.paths, "algebra.json [module.json]")->required()->expected(1, 2);
    add_common(validate_cmd);
    bind(validate_cmd, cmd_validate);

    auto* inv_cmd = app.add_subcommand("invariants", "Series, Killing determinant, radical, Levi subalgebra");
    inv_cmd->add_option("algebra", cfg.paths, "algebra.json")->required()->expected(1);
    add_common(inv_cmd);
    bind(inv_cmd, cmd_invariants);

    auto* coh_cmd = app.add_subcommand("cohomology", "H^n(L, V); V defaults to the trivial module K");
    coh_cmd->add_option("-n,--degree", cfg.degree, "Degree n")->required();
    coh_cmd->add_option("files", cfg.paths, "algebra.json [module.json]")->required()->expected(1, 2);
    coh_cmd->add_flag("--adjoint", cfg.adjoint, "Use the adjoint module when no module file is given");
    add_common(coh_cmd);
    bind(coh_cmd, cmd_cohomology);

    auto* cls_cmd = app.add_subcommand("classify", "Decide 2-triviality or emit a verified witness");
    cls_cmd->add_option("algebra", cfg.paths, "algebra.json")->required()->expected(1);
    add_common(cls_cmd);
    bind(cls_cmd, cmd_classify);

    auto* verify_cmd = app.add_subcommand("verify", "Identity and battery checks");
    verify_cmd->require_subcommand(1);
    auto* v_dix = verify_cmd->add_subcommand("dixmier", "Codimension-one ideal identity, n = 1..max-degree");
    v_dix->add_option("files", cfg.paths, "algebra.json [module.json]")->required()->expected(1, 2);
    v_dix->add_option("--max-degree", cfg.max_degree, "Highest degree checked");
    v_dix->add_flag("--adjoint", cfg.adjoint, "Use the adjoint module when no module file is given");
    add_common(v_dix);
    bind(v_dix, cmd_verify_dixmier);
    auto* v_hs = verify_cmd->add_subcommand("hs", "E2 degeneration for the Levi splitting");
    v_hs->add_option("files", cfg.paths, "algebra.json [module.json]")->required()->expected(1, 2);
    v_hs->add_flag("--adjoint", cfg.adjoint, "Use the adjoint module when no module file is given");
    add_common(v_hs);
    bind(v_hs, cmd_verify_hs);
    auto* v_kun = verify_cmd->add_subcommand("kunneth", "Direct-sum identity, n = 0..max-degree");
    v_kun->add_option("files", cfg.paths, "A.json B.json [VA.json VB.json]")->required()->expected(2, 4);
    v_kun->add_option("--max-degree", cfg.max_degree, "Highest degree checked");
    add_common(v_kun);
    bind(v_kun, cmd_verify_kunneth);
    auto* v_wh = verify_cmd->add_subcommand("whitehead", "H1 = H2 = 0 over a module battery (semisimple input)");
    v_wh->add_option("files", cfg.paths, "algebra.json [seed-module.json...]")->required()->expected(1, -1);
    v_wh->add_option("--max-module-dim", cfg.max_module_dim, "Largest battery module")->check(CLI::PositiveNumber);
    add_common(v_wh);
    bind(v_wh, cmd_verify_whitehead);
    auto* v_nil = verify_cmd->add_subcommand("nilpotent-h2", "H^2(L,K) != 0 for nilpotent L of dim > 1");
    v_nil->add_option("algebra", cfg.paths, "algebra.json")->required()->expected(1);
    add_common(v_nil);
    bind(v_nil, cmd_verify_nilpotent);

    auto* cat_cmd = app.add_subcommand("catalog", "Built-in example algebras");
    cat_cmd->require_subcommand(1);
    auto* c_list = cat_cmd->add_subcommand("list", "Entry names");
    add_common(c_list);
    bind(c_list, cmd_catalog_list);
    auto* c_show = cat_cmd->add_subcommand("show", "Algebra JSON of an entry (or one of its modules)");
    c_show->add_option("name", cfg.name)->required();
    c_show->add_option("--module", cfg.module_name, "Named module of the entry");
    bind(c_show, cmd_catalog_show);
    auto* c_export = cat_cmd->add_subcommand("export", "Write every entry and module as JSON into a directory");
    c_export->add_option("dir", cfg.export_dir)->required();
    bind(c_export, cmd_catalog_export);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return invalid_input;
    }

    try {
        return action(cfg);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const ContractViolation& e) {
        std::cerr << "internal assertion violated: " << e.what() << "\n";
        return contract;
    }
}
