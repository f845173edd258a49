#include "evensets/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "evensets/catalog.hpp"
#include "evensets/config.hpp"
#include "evensets/doublecover.hpp"
#include "evensets/errors.hpp"
#include "evensets/evenset.hpp"

namespace evensets {

namespace {

int error_exit_code(const Error& e) {
    const std::string& c = e.code();
    if (c == "ParseError" || c == "BadInput" || c == "UnknownEntry" || c == "BoundsTooLarge")
        return 2;
    return 1;
}

int emit_error(const Error& e, const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    if (g.json) {
        nlohmann::json j;
        j["ok"] = false;
        j["error"] = {{"code", e.code()}, {"message", e.what()}};
        out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return error_exit_code(e);
}

bool has_euler_number(const KodairaType& t) {
    return t.kind != KodairaType::Kind::NumericClass &&
           t.kind != KodairaType::Kind::Unrecognized;
}

nlohmann::json json_reduction(const NefReduction& nr) {
    nlohmann::json j;
    j["contracted"] = nr.contracted;
    j["skipped_non_basis"] = nr.non_basis;
    j["result"] = json_even_set(nr.report);
    return j;
}

} // namespace

int cmd_verify(const std::string& config_path, const GlobalOpts& g, std::ostream& out,
               std::ostream& err) {
    ProblemConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
    try {
        SurfaceLattice lat = cfg.lattice();
        EvenSetReport rep = verify_even_set(lat, cfg.curves);
        if (g.json) {
            nlohmann::json j = json_even_set(rep);
            j["ok"] = true;
            if (!cfg.minus_ones.empty())
                j["reduction"] = json_reduction(nef_reduction(rep, cfg.minus_ones));
            out << j.dump(2) << "\n";
        } else {
            render_even_set(out, rep, g.palette);
            if (!cfg.minus_ones.empty()) {
                NefReduction nr = nef_reduction(rep, cfg.minus_ones);
                out << "reduction by declared (-1)-classes:\n";
                if (nr.contracted.empty()) {
                    out << "  nothing contracted\n";
                } else {
                    out << "  contracted:";
                    for (const auto& name : nr.contracted) out << " " << name;
                    out << "\n";
                }
                for (const auto& name : nr.non_basis)
                    out << "  skipped (not a basis class): " << name << "\n";
                render_even_set(out, nr.report, g.palette);
            }
        }
        return 0;
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
}

int cmd_classify(const std::string& config_path, const GlobalOpts& g, std::ostream& out,
                 std::ostream& err) {
    ProblemConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
    try {
        SurfaceLattice lat = cfg.lattice();
        EvenSetReport rep = verify_even_set(lat, cfg.curves);
        CoverClassification cover = classify_cover(rep);
        bool feasible = cover.verdict != Verdict::Infeasible;
        Feasibility window;
        bool have_window = false;
        if (cover.verdict == Verdict::GeneralTypeCandidate &&
            cfg.regularity != Regularity::Unknown) {
            window = general_type_feasibility(cover.ks2, cover.n, cfg.regularity);
            have_window = true;
            if (!window.pass) feasible = false;
        }
        if (g.json) {
            nlohmann::json j = json_cover(cover);
            j["ok"] = feasible;
            j["regularity"] = to_string(cfg.regularity);
            if (have_window) {
                j["regularity_window"] = {{"pass", window.pass}, {"reasons", window.reasons}};
            }
            out << j.dump(2) << "\n";
        } else {
            render_cover(out, cover, g.palette);
            out << "regularity: " << to_string(cfg.regularity) << "\n";
            if (have_window) {
                out << (window.pass ? g.palette.ok("ok  ") : g.palette.bad("FAIL"))
                    << "  feasibility window for " << to_string(cfg.regularity) << " covers";
                for (const auto& r : window.reasons) out << "; " << r;
                out << "\n";
            }
        }
        return feasible ? 0 : 1;
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
}

int cmd_fiber(const std::string& config_path, const FiberOpts& f, const GlobalOpts& g,
              std::ostream& out, std::ostream& err) {
    ProblemConfig cfg;
    try {
        cfg = load_config(config_path);
        if (cfg.fibers.empty()) fail("BadInput", "no fiber blocks in '" + config_path + "'");
        if (f.budget != 12 && f.budget != 24)
            fail("BadInput", "budget is 12 or 24, got " + std::to_string(f.budget));
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
    bool all_ok = true;
    std::vector<KodairaType> definite;
    std::size_t ambiguous = 0;
    nlohmann::json jfibers = nlohmann::json::array();
    for (const auto& nf : cfg.fibers) {
        ValidationReport v = validate_fiber(nf.fiber);
        nlohmann::json jf;
        jf["name"] = nf.name;
        jf["validation"] = json_validation(v);
        if (!g.json) {
            out << "fiber " << nf.name << ": ";
            render_validation(out, v, g.palette);
        }
        if (!v.valid) {
            all_ok = false;
            jfibers.push_back(jf);
            continue;
        }
        FiberClass fc = classify_fiber(nf.fiber);
        jf["classification"] = json_fiber_class(fc);
        jfibers.push_back(jf);
        if (!g.json) render_fiber_class(out, fc, g.palette);
        if (fc.definite() && has_euler_number(fc.type()))
            definite.push_back(fc.type());
        else
            ++ambiguous;
    }
    nlohmann::json jbudget;
    if (all_ok) {
        try {
            BudgetResult b = c2_budget(definite, f.budget);
            jbudget = {{"sum", b.sum},
                       {"total", b.total},
                       {"residual", b.residual},
                       {"exact", b.exact},
                       {"excluded", ambiguous}};
            if (!g.json) {
                out << "euler budget: " << b.sum << " of " << b.total
                    << (b.exact ? " (exact)" : " (residual " + std::to_string(b.residual) + ")");
                if (ambiguous)
                    out << "  [" << ambiguous << " ambiguous or numeric fiber(s) excluded]";
                out << "\n";
            }
        } catch (const Error& e) {
            all_ok = false;
            jbudget = {{"error", e.what()}};
            if (!g.json) out << g.palette.bad("budget overflow") << ": " << e.what() << "\n";
        }
    }
    if (g.json) {
        nlohmann::json j;
        j["ok"] = all_ok;
        j["fibers"] = jfibers;
        j["budget"] = jbudget;
        out << j.dump(2) << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_search(Ambient ambient, std::size_t k, const SearchOptions& options, const GlobalOpts& g,
               std::ostream& out, std::ostream& err) {
    try {
        SurfaceLattice lat = make_lattice(ambient, k);
        SearchResult res = search_even_sets(lat, options);
        if (g.json) {
            nlohmann::json j;
            j["ambient"] = ambient == Ambient::Plane ? "plane" : "quadric";
            j["k"] = k;
            j["bound"] = options.bound;
            j["n"] = options.n;
            j["dedup"] = options.dedup;
            j["candidates"] = res.candidate_count;
            j["raw_sets"] = res.raw_count;
            nlohmann::json sets = nlohmann::json::array();
            for (const auto& set : res.sets) {
                nlohmann::json s = nlohmann::json::array();
                for (const auto& d : set) {
                    nlohmann::json a = nlohmann::json::array();
                    for (std::size_t i = 0; i < d.rank(); ++i)
                        a.push_back(d[i].convert_to<long long>());
                    s.push_back(a);
                }
                sets.push_back(s);
            }
            j["sets"] = sets;
            out << j.dump(2) << "\n";
        } else {
            out << "box bound " << options.bound << ": " << res.candidate_count
                << " candidate class(es)\n";
            out << "sets of " << options.n << ": " << res.sets.size();
            if (options.dedup)
                out << " orbit(s) from " << res.raw_count << " set(s)";
            out << "\n";
            std::size_t i = 0;
            for (const auto& set : res.sets) {
                out << "set " << ++i << ":\n";
                for (const auto& d : set) out << "  " << pretty(lat, d) << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
}

int cmd_catalog(const std::string& name, const CatalogOpts& c, const GlobalOpts& g,
                std::ostream& out, std::ostream& err) {
    if (name.empty()) {
        if (g.json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& e : catalog_all()) j.push_back(json_catalog_entry(e));
            out << j.dump(2) << "\n";
        } else {
            for (const auto& e : catalog_all()) render_catalog_entry(out, e, g.palette);
        }
        return 0;
    }
    CatalogEntry entry;
    try {
        entry = catalog_build(name);
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
    try {
        std::vector<std::string> mismatches;
        EvenSetReport rep = verify_even_set(entry.lattice, entry.curves);
        CoverClassification cover = classify_cover(rep);
        auto expect = [&mismatches](const std::string& what, const std::string& got,
                                    const std::string& want) {
            if (got != want) mismatches.push_back(what + ": got " + got + ", expected " + want);
        };
        expect("verdict", to_string(cover.verdict), to_string(entry.expected.verdict));
        expect("n", cover.n.str(), std::to_string(entry.expected.n));
        expect("K_X^2", cover.kx2.str(), std::to_string(entry.expected.kx2));
        expect("K_S^2", cover.ks2.str(), std::to_string(entry.expected.ks2));

        std::vector<KodairaType> types;
        bool all_definite = true;
        for (const auto& fc : entry.fibers) {
            FiberClass k = classify_fiber(fc);
            if (k.definite() && has_euler_number(k.type()))
                types.push_back(k.type());
            else
                all_definite = false;
        }
        nlohmann::json jbudget;
        if (!entry.fibers.empty()) {
            if (!all_definite) mismatches.push_back("a carried fiber failed to classify");
            try {
                BudgetResult b = c2_budget(types, 12);
                jbudget = {{"sum", b.sum}, {"total", b.total}, {"exact", b.exact}};
            } catch (const Error& e) {
                mismatches.push_back(std::string("fiber budget: ") + e.what());
            }
        }

        if (!c.export_path.empty()) {
            std::string text = serialize_config(config_from_catalog(entry));
            if (c.export_path == "-") {
                out << text;
            } else {
                std::ofstream f(c.export_path);
                if (!f) fail("BadInput", "cannot write '" + c.export_path + "'");
                f << text;
            }
        }

        if (g.json) {
            nlohmann::json j = json_catalog_entry(entry);
            j["computed"] = json_cover(cover);
            nlohmann::json tn = nlohmann::json::array();
            for (const auto& t : types) tn.push_back(to_string(t));
            j["fiber_types"] = tn;
            if (!jbudget.is_null()) j["fiber_budget"] = jbudget;
            j["ok"] = mismatches.empty();
            j["mismatches"] = mismatches;
            out << j.dump(2) << "\n";
        } else if (c.export_path != "-") {
            render_catalog_entry(out, entry, g.palette);
            render_even_set(out, rep, g.palette);
            render_cover(out, cover, g.palette);
            if (!types.empty()) {
                out << "fiber types:";
                for (const auto& t : types) out << " " << to_string(t);
                out << "\n";
            }
            if (mismatches.empty()) {
                out << g.palette.ok("ok") << "  expected invariants reproduced\n";
            } else {
                for (const auto& m : mismatches)
                    out << g.palette.bad("MISMATCH") << "  " << m << "\n";
            }
        }
        return mismatches.empty() ? 0 : 1;
    } catch (const Error& e) {
        return emit_error(e, g, out, err);
    }
}

} // namespace evensets
