#include "evensets/report.hpp"

#include <cstdlib>
#include <map>
#include <ostream>

namespace evensets {

Palette Palette::from_env(bool to_tty) {
    if (!to_tty) return Palette(false);
    if (std::getenv("NO_COLOR") != nullptr) return Palette(false);
    return Palette(true);
}

namespace {

const char* ambient_name(Ambient a) { return a == Ambient::Plane ? "plane" : "quadric"; }

long long as_ll(const Int& v) { return v.convert_to<long long>(); }

std::string mark(bool pass, const Palette& p) {
    return pass ? p.ok("ok  ") : p.bad("FAIL");
}

} // namespace

void render_even_set(std::ostream& os, const EvenSetReport& r, const Palette& p) {
    os << p.head("even set") << ": n = " << r.n << " on " << ambient_name(r.lattice.ambient())
       << " with k = " << r.lattice.k() << "\n";
    for (std::size_t i = 0; i < r.curves.size(); ++i)
        os << "  C" << (i + 1) << " = " << pretty(r.lattice, r.curves[i]) << "\n";
    os << "half class L = " << pretty(r.lattice, r.half) << "\n";
    os << "K_X^2 = " << r.kx2 << "\n";
    os << "half is anticanonical: " << (r.half_is_anticanonical ? "yes" : "no") << "\n";
    os << "identities:\n";
    for (const auto& id : r.identities)
        os << "  " << mark(id.pass, p) << "  " << id.name << "  [" << id.lhs << " vs " << id.rhs
           << "]\n";
    os << "note: " << EvenSetReport::nef_caveat << "\n";
}

void render_cover(std::ostream& os, const CoverClassification& c, const Palette& p) {
    os << p.head("double cover") << ": n = " << c.n << "  K_X^2 = " << c.kx2
       << "  K_S^2 = " << c.ks2 << "  chi = " << c.chi << "  c2 = " << c.c2 << "\n";
    os << "verdict: " << p.head(to_string(c.verdict)) << "\n";
    os << "reason: " << c.reason << "\n";
    if (c.conditional)
        os << "note: numerical classification, conditional on geometric realizability\n";
    os << "bounds:\n";
    for (const auto& b : c.bounds) {
        os << "  " << mark(b.pass, p) << "  " << b.name;
        if (!b.detail.empty()) os << "  [" << b.detail << "]";
        os << "\n";
    }
}

void render_fiber_config(std::ostream& os, const FiberConfig& f, const Palette&) {
    os << "components:\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        const FiberComponent& c = f.component(i);
        os << "  " << c.id << ": self " << c.self_int << ", mult " << c.mult;
        if (c.pa != 0) os << ", pa " << c.pa;
        for (const auto& s : c.sing) {
            os << ", singular point (mult " << s.multiplicity;
            if (s.branches) {
                os << ", branches";
                for (long long b : *s.branches) os << " " << b;
            } else {
                os << ", branches unknown";
            }
            os << ")";
        }
        os << "\n";
    }
    bool any = false;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (const PairData* pd = f.pair_data(i, j); pd && pd->total != 0) {
                if (!any) {
                    os << "pairs:\n";
                    any = true;
                }
                os << "  " << f.component(i).id << "." << f.component(j).id << " = " << pd->total;
                std::map<std::string, long long> named;
                for (const auto& [l, cnt] : pd->at)
                    if (cnt > 0) named[f.label_name(l)] += cnt;
                for (const auto& [name, cnt] : named) {
                    os << " @" << name;
                    if (cnt != 1) os << "*" << cnt;
                }
                os << "\n";
            }
}

void render_validation(std::ostream& os, const ValidationReport& v, const Palette& p) {
    if (v.valid) {
        os << p.ok("valid fiber") << (v.fully_labeled ? " (fully labeled)" : " (partially labeled)")
           << "\n";
    } else {
        os << p.bad("not a fiber") << ": " << v.reason << "\n";
    }
    for (const auto& w : v.warnings) os << "warning: " << w << "\n";
}

void render_fiber_class(std::ostream& os, const FiberClass& fc, const Palette& p) {
    if (fc.definite()) {
        os << "type: " << p.head(to_string(fc.type())) << "\n";
    } else {
        os << "candidates:";
        for (const auto& t : fc.candidates) os << " " << to_string(t);
        os << "\n";
    }
    if (!fc.history.empty()) {
        os << "contractions:";
        for (const auto& s : fc.history) os << " " << s.comp_id << "->" << s.label;
        os << "\n";
    }
    os << "minimal configuration:\n";
    render_fiber_config(os, fc.minimal, p);
    if (!fc.note.empty()) os << "note: " << fc.note << "\n";
}

void render_catalog_entry(std::ostream& os, const CatalogEntry& e, const Palette& p) {
    os << p.head(e.name) << ": " << e.description << "\n";
    os << "  " << ambient_name(e.lattice.ambient()) << ", k = " << e.lattice.k()
       << ", n = " << e.expected.n << ", K_X^2 = " << e.expected.kx2
       << ", K_S^2 = " << e.expected.ks2 << ", expected " << to_string(e.expected.verdict)
       << ", pencil index " << e.halphen_index;
    if (!e.fibers.empty()) os << ", " << e.fibers.size() << " fiber configurations";
    os << "\n";
}

// ── JSON ─────────────────────────────────────────────────────────────

namespace {

nlohmann::json json_class(const DivClass& d) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) a.push_back(as_ll(d[i]));
    return a;
}

} // namespace

nlohmann::json json_even_set(const EvenSetReport& r) {
    nlohmann::json j;
    j["ambient"] = ambient_name(r.lattice.ambient());
    j["k"] = r.lattice.k();
    j["n"] = r.n;
    nlohmann::json curves = nlohmann::json::array();
    for (const auto& c : r.curves) curves.push_back(json_class(c));
    j["curves"] = curves;
    j["half"] = json_class(r.half);
    j["kx2"] = as_ll(r.kx2);
    j["half_is_anticanonical"] = r.half_is_anticanonical;
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& id : r.identities) {
        nlohmann::json e;
        e["name"] = id.name;
        e["lhs"] = as_ll(id.lhs);
        e["rhs"] = as_ll(id.rhs);
        e["pass"] = id.pass;
        ids.push_back(e);
    }
    j["identities"] = ids;
    j["note"] = EvenSetReport::nef_caveat;
    return j;
}

nlohmann::json json_cover(const CoverClassification& c) {
    nlohmann::json j;
    j["n"] = as_ll(c.n);
    j["kx2"] = as_ll(c.kx2);
    j["ks2"] = as_ll(c.ks2);
    j["chi"] = as_ll(c.chi);
    j["c2"] = as_ll(c.c2);
    j["verdict"] = to_string(c.verdict);
    j["reason"] = c.reason;
    j["conditional"] = c.conditional;
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : c.bounds) {
        nlohmann::json e;
        e["name"] = b.name;
        e["pass"] = b.pass;
        e["detail"] = b.detail;
        bounds.push_back(e);
    }
    j["bounds"] = bounds;
    return j;
}

nlohmann::json json_fiber_config(const FiberConfig& f) {
    nlohmann::json j;
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const FiberComponent& c = f.component(i);
        nlohmann::json e;
        e["id"] = c.id;
        e["self"] = c.self_int;
        e["mult"] = c.mult;
        e["pa"] = c.pa;
        nlohmann::json sing = nlohmann::json::array();
        for (const auto& s : c.sing) {
            nlohmann::json sp;
            sp["label"] = f.label_name(s.label);
            sp["multiplicity"] = s.multiplicity;
            if (s.branches)
                sp["branches"] = *s.branches;
            else
                sp["branches"] = nullptr;
            sing.push_back(sp);
        }
        e["singular_points"] = sing;
        comps.push_back(e);
    }
    j["components"] = comps;
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t jx = i + 1; jx < f.size(); ++jx)
            if (const PairData* pd = f.pair_data(i, jx); pd && pd->total != 0) {
                nlohmann::json e;
                e["a"] = f.component(i).id;
                e["b"] = f.component(jx).id;
                e["total"] = pd->total;
                nlohmann::json at = nlohmann::json::object();
                for (const auto& [l, cnt] : pd->at)
                    if (cnt > 0) at[f.label_name(l)] = cnt;
                e["at"] = at;
                pairs.push_back(e);
            }
    j["pairs"] = pairs;
    return j;
}

nlohmann::json json_validation(const ValidationReport& v) {
    nlohmann::json j;
    j["valid"] = v.valid;
    j["reason"] = v.reason;
    j["warnings"] = v.warnings;
    j["fully_labeled"] = v.fully_labeled;
    return j;
}

nlohmann::json json_kodaira(const KodairaType& t) {
    nlohmann::json j;
    j["name"] = to_string(t);
    switch (t.kind) {
    case KodairaType::Kind::Smooth: j["kind"] = "smooth"; break;
    case KodairaType::Kind::I: j["kind"] = "I"; break;
    case KodairaType::Kind::II: j["kind"] = "II"; break;
    case KodairaType::Kind::III: j["kind"] = "III"; break;
    case KodairaType::Kind::IV: j["kind"] = "IV"; break;
    case KodairaType::Kind::Dtilde4: j["kind"] = "I0*"; break;
    case KodairaType::Kind::Etilde6: j["kind"] = "IV*"; break;
    case KodairaType::Kind::NumericClass: j["kind"] = "numeric"; break;
    case KodairaType::Kind::Unrecognized: j["kind"] = "unrecognized"; break;
    }
    j["r"] = t.r;
    j["m"] = t.m;
    j["desc"] = t.desc;
    return j;
}

nlohmann::json json_fiber_class(const FiberClass& fc) {
    nlohmann::json j;
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& t : fc.candidates) cands.push_back(json_kodaira(t));
    j["candidates"] = cands;
    j["definite"] = fc.definite();
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& s : fc.history) {
        nlohmann::json e;
        e["comp"] = s.comp_id;
        e["label"] = s.label;
        hist.push_back(e);
    }
    j["contractions"] = hist;
    j["minimal"] = json_fiber_config(fc.minimal);
    j["note"] = fc.note;
    return j;
}

nlohmann::json json_catalog_entry(const CatalogEntry& e) {
    nlohmann::json j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["ambient"] = ambient_name(e.lattice.ambient());
    j["k"] = e.lattice.k();
    j["expected"] = {{"verdict", to_string(e.expected.verdict)},
                     {"n", e.expected.n},
                     {"kx2", e.expected.kx2},
                     {"ks2", e.expected.ks2}};
    j["pencil_index"] = e.halphen_index;
    j["fiber_count"] = e.fibers.size();
    return j;
}

} // namespace evensets
