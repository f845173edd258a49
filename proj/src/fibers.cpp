#include "evensets/fibers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "evensets/errors.hpp"

namespace evensets {

std::pair<std::size_t, std::size_t> FiberConfig::key(std::size_t i, std::size_t j) {
    return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
}

std::size_t FiberConfig::add_component(const std::string& id, long long self_int, long long mult,
                                       long long pa) {
    if (id.empty()) fail("BadInput", "component id must be nonempty");
    if (by_id_.count(id)) fail("BadInput", "duplicate component id '" + id + "'");
    FiberComponent c;
    c.id = id;
    c.self_int = self_int;
    c.mult = mult;
    c.pa = pa;
    comps_.push_back(std::move(c));
    by_id_[id] = comps_.size() - 1;
    return comps_.size() - 1;
}

std::size_t FiberConfig::index_of(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) fail("BadInput", "no component named '" + id + "'");
    return it->second;
}

bool FiberConfig::has_component(const std::string& id) const { return by_id_.count(id) != 0; }

void FiberConfig::set_pair(const std::string& a, const std::string& b, long long total) {
    set_pair_by_index(index_of(a), index_of(b), total);
}

void FiberConfig::set_pair_by_index(std::size_t i, std::size_t j, long long total) {
    if (i == j) fail("BadInput", "a pair needs two distinct components");
    if (total < 0) fail("BadInput", "intersection totals are nonnegative");
    if (total == 0) {
        pairs_.erase(key(i, j));
        return;
    }
    pairs_[key(i, j)].total = total;
}

void FiberConfig::add_pair_label(const std::string& a, const std::string& b,
                                 const std::string& label, long long count) {
    add_pair_label_by_index(index_of(a), index_of(b), ensure_label(label), count);
}

void FiberConfig::add_pair_label_by_index(std::size_t i, std::size_t j, int label,
                                          long long count) {
    if (count <= 0) fail("BadInput", "label counts are positive");
    auto it = pairs_.find(key(i, j));
    if (it == pairs_.end()) fail("BadInput", "label on a pair with no intersection");
    it->second.at[label] += count;
}

void FiberConfig::declare_singular(const std::string& comp, const std::string& kind) {
    SingularPoint p;
    p.label = fresh_label();
    p.multiplicity = 2;
    if (kind == "node")
        p.branches = std::vector<long long>{1, 1};
    else if (kind == "cusp")
        p.branches = std::vector<long long>{2};
    else if (kind == "sing")
        p.branches = std::nullopt;
    else
        fail("BadInput", "unknown singularity kind '" + kind + "'");
    comps_[index_of(comp)].sing.push_back(std::move(p));
}

long long FiberConfig::meet(std::size_t i, std::size_t j) const {
    if (i == j) return comps_[i].self_int;
    auto it = pairs_.find(key(i, j));
    return it == pairs_.end() ? 0 : it->second.total;
}

const PairData* FiberConfig::pair_data(std::size_t i, std::size_t j) const {
    auto it = pairs_.find(key(i, j));
    return it == pairs_.end() ? nullptr : &it->second;
}

int FiberConfig::ensure_label(const std::string& name) {
    for (std::size_t l = 0; l < label_names_.size(); ++l)
        if (label_names_[l] == name) return static_cast<int>(l);
    label_names_.push_back(name);
    label_parent_.push_back(static_cast<int>(label_names_.size()) - 1);
    return static_cast<int>(label_names_.size()) - 1;
}

int FiberConfig::fresh_label() {
    for (int n = 1;; ++n) {
        std::string name = "c" + std::to_string(n);
        bool taken = false;
        for (const auto& existing : label_names_)
            if (existing == name) taken = true;
        if (!taken) return ensure_label(name);
    }
}

int FiberConfig::label_rep(int l) const {
    while (label_parent_[l] != l) l = label_parent_[l];
    return l;
}

void FiberConfig::union_labels(int a, int b) {
    a = label_rep(a);
    b = label_rep(b);
    if (a != b) label_parent_[b] = a;
}

void FiberConfig::erase_component(std::size_t t) {
    if (t >= comps_.size()) fail("BadInput", "component index out of range");
    by_id_.erase(comps_[t].id);
    comps_.erase(comps_.begin() + static_cast<std::ptrdiff_t>(t));
    for (auto& [id, idx] : by_id_)
        if (idx > t) --idx;
    std::map<std::pair<std::size_t, std::size_t>, PairData> renumbered;
    for (auto& [k, v] : pairs_) {
        if (k.first == t || k.second == t) continue;
        auto shift = [t](std::size_t i) { return i > t ? i - 1 : i; };
        renumbered[key(shift(k.first), shift(k.second))] = std::move(v);
    }
    pairs_ = std::move(renumbered);
}

// ── validation ───────────────────────────────────────────────────────

ValidationReport validate_fiber(const FiberConfig& cfg) {
    ValidationReport rep;
    rep.fully_labeled = true;
    const std::size_t n = cfg.size();
    if (n == 0) {
        rep.reason = "no components";
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = cfg.component(i);
        if (c.mult < 1) {
            rep.reason = "component '" + c.id + "' has multiplicity " + std::to_string(c.mult);
            return rep;
        }
        if (c.pa < 0) {
            rep.reason = "component '" + c.id + "' has negative arithmetic genus";
            return rep;
        }
        long long delta = 0;
        for (const auto& p : c.sing) delta += p.multiplicity * (p.multiplicity - 1) / 2;
        if (delta > c.pa) {
            rep.reason = "singular points of '" + c.id + "' exceed its arithmetic genus";
            return rep;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const PairData* pd = cfg.pair_data(i, j);
            if (!pd) continue;
            long long labeled = 0;
            for (const auto& [l, cnt] : pd->at) labeled += cnt;
            if (labeled > pd->total) {
                rep.reason = "labeled intersections of '" + cfg.component(i).id + "' and '" +
                             cfg.component(j).id + "' exceed their total";
                return rep;
            }
            if (labeled < pd->total) rep.fully_labeled = false;
        }
    // F.comp = 0 for every component, F the multiplicity-weighted sum.
    for (std::size_t j = 0; j < n; ++j) {
        long long dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += cfg.component(i).mult * cfg.meet(i, j);
        if (dot != 0) {
            rep.reason = "F." + cfg.component(j).id + " = " + std::to_string(dot) + ", not 0";
            return rep;
        }
    }
    RatMatrix g(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = Rat(cfg.meet(i, j));
    Inertia in = symmetric_inertia(g);
    if (in.positive > 0) {
        rep.reason = "intersection matrix is not negative semidefinite";
        return rep;
    }
    if (in.zero != 1) {
        rep.reason = "intersection matrix kernel has dimension " + std::to_string(in.zero) +
                     ", not 1";
        return rep;
    }
    // Lint: a (-4)-component meeting (-1)-components with total weight > 3
    // cannot sit in a relatively minimal elliptic fiber in the usual way.
    for (std::size_t i = 0; i < n; ++i) {
        if (cfg.component(i).self_int != -4) continue;
        long long against_minus1 = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && cfg.component(j).self_int == -1) against_minus1 += cfg.meet(i, j);
        if (against_minus1 > 3)
            rep.warnings.push_back("component '" + cfg.component(i).id +
                                   "' meets (-1)-components with total " +
                                   std::to_string(against_minus1));
    }
    rep.valid = true;
    return rep;
}

void require_valid_fiber(const FiberConfig& cfg) {
    ValidationReport rep = validate_fiber(cfg);
    if (!rep.valid) fail("NotAFiber", rep.reason);
}

// ── contraction ──────────────────────────────────────────────────────

FiberConfig contract(const FiberConfig& cfg, const std::string& comp_id, ContractionStep* step) {
    require_valid_fiber(cfg);
    const std::size_t t = cfg.index_of(comp_id);
    const FiberComponent& theta = cfg.component(t);
    if (theta.self_int != -1 || theta.pa != 0)
        fail("NotContractible", "'" + comp_id + "' is not a (-1)-component of genus 0");

    FiberConfig out = cfg;
    const std::size_t n = cfg.size();
    std::vector<long long> a(n, 0); // contact with theta
    for (std::size_t i = 0; i < n; ++i)
        if (i != t) a[i] = cfg.meet(i, t);

    const int ell = out.fresh_label();

    // Labels sitting on theta join the tower of the fresh point.
    for (std::size_t i = 0; i < n; ++i) {
        if (i == t) continue;
        if (const PairData* pd = cfg.pair_data(i, t))
            for (const auto& [l, cnt] : pd->at)
                if (cnt > 0) out.union_labels(ell, l);
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (i == t || a[i] == 0) continue;
        FiberComponent& ci = out.component(i);
        ci.self_int += a[i] * a[i];
        ci.pa += a[i] * (a[i] - 1) / 2;
        if (a[i] >= 2) {
            SingularPoint p;
            p.label = ell;
            p.multiplicity = a[i];
            // Branch contact orders: the label distribution of the pair
            // (theta, C_i), grouped by representative, when fully known.
            const PairData* pd = cfg.pair_data(i, t);
            long long labeled = 0;
            std::map<int, long long> by_rep;
            if (pd)
                for (const auto& [l, cnt] : pd->at) {
                    labeled += cnt;
                    by_rep[cfg.label_rep(l)] += cnt;
                }
            if (labeled == a[i]) {
                std::vector<long long> branches;
                for (const auto& [rep, cnt] : by_rep) branches.push_back(cnt);
                std::sort(branches.begin(), branches.end());
                p.branches = std::move(branches);
            }
            ci.sing.push_back(std::move(p));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == t || a[j] == 0) continue;
            long long add = a[i] * a[j];
            out.set_pair_by_index(i, j, cfg.meet(i, j) + add);
            out.add_pair_label_by_index(i, j, ell, add);
        }
    }

    std::string label_name = out.label_name(ell);
    out.erase_component(t);
    require_valid_fiber(out);
    if (step) *step = ContractionStep{comp_id, label_name};
    return out;
}

std::pair<FiberConfig, std::vector<ContractionStep>> minimalize(const FiberConfig& cfg) {
    require_valid_fiber(cfg);
    FiberConfig cur = cfg;
    std::vector<ContractionStep> steps;
    for (;;) {
        std::size_t pick = cur.size();
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const auto& c = cur.component(i);
            if (c.self_int == -1 && c.pa == 0) {
                pick = i;
                break;
            }
        }
        if (pick == cur.size()) break;
        ContractionStep step;
        cur = contract(cur, cur.component(pick).id, &step);
        steps.push_back(std::move(step));
    }
    return {std::move(cur), std::move(steps)};
}

// ── classification ───────────────────────────────────────────────────

std::string to_string(const KodairaType& t) {
    std::ostringstream os;
    auto mult_prefix = [&]() {
        if (t.m > 1) os << t.m;
    };
    switch (t.kind) {
    case KodairaType::Kind::Smooth:
        mult_prefix();
        os << (t.m > 1 ? "I0" : "smooth");
        break;
    case KodairaType::Kind::I:
        mult_prefix();
        os << "I" << t.r;
        break;
    case KodairaType::Kind::II:
        mult_prefix();
        os << "II";
        break;
    case KodairaType::Kind::III:
        mult_prefix();
        os << "III";
        break;
    case KodairaType::Kind::IV:
        mult_prefix();
        os << "IV";
        break;
    case KodairaType::Kind::Dtilde4:
        mult_prefix();
        os << "I0*";
        break;
    case KodairaType::Kind::Etilde6:
        mult_prefix();
        os << "IV*";
        break;
    case KodairaType::Kind::NumericClass:
        os << "numeric(" << t.desc << ")";
        break;
    case KodairaType::Kind::Unrecognized:
        os << "unrecognized(" << t.desc << ")";
        break;
    }
    return os.str();
}

namespace {

KodairaType make_type(KodairaType::Kind kind, long long r, long long m, std::string desc = "") {
    KodairaType t;
    t.kind = kind;
    t.r = r;
    t.m = m;
    t.desc = std::move(desc);
    return t;
}

std::string shape_summary(const FiberConfig& cfg) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const auto& c = cfg.component(i);
        if (i) os << ", ";
        os << c.mult << "x(" << c.self_int << ")";
        if (c.pa) os << " pa=" << c.pa;
    }
    return os.str();
}

bool all_rational_minus2(const FiberConfig& cfg) {
    for (std::size_t i = 0; i < cfg.size(); ++i)
        if (cfg.component(i).self_int != -2 || cfg.component(i).pa != 0) return false;
    return true;
}

} // namespace

FiberClass classify_fiber(const FiberConfig& cfg) {
    FiberClass out;
    auto [min, steps] = minimalize(cfg);
    out.history = std::move(steps);

    long long m = 0;
    for (std::size_t i = 0; i < min.size(); ++i)
        m = std::gcd(m, min.component(i).mult);
    FiberConfig norm = min;
    for (std::size_t i = 0; i < norm.size(); ++i) norm.component(i).mult /= m;
    out.minimal = std::move(min);

    const std::size_t n = norm.size();

    if (n == 1) {
        const FiberComponent& c = norm.component(0);
        if (c.self_int != 0 || c.mult != 1) {
            out.candidates.push_back(make_type(KodairaType::Kind::NumericClass, 0, m,
                                               shape_summary(norm)));
            return out;
        }
        if (c.pa == 0) {
            out.candidates.push_back(
                make_type(KodairaType::Kind::NumericClass, 0, m, "genus 0 fiber class"));
            out.note = "square-zero rational class; not an elliptic fiber";
            return out;
        }
        if (c.pa >= 2) {
            out.candidates.push_back(
                make_type(KodairaType::Kind::NumericClass, 0, m, "genus >= 2 fiber class"));
            return out;
        }
        if (c.sing.empty()) {
            out.candidates.push_back(make_type(KodairaType::Kind::Smooth, 0, m));
            return out;
        }
        if (c.sing.size() == 1 && c.sing[0].multiplicity == 2) {
            const auto& br = c.sing[0].branches;
            if (br && br->size() == 2) {
                out.candidates.push_back(make_type(KodairaType::Kind::I, 1, m));
            } else if (br && br->size() == 1) {
                out.candidates.push_back(make_type(KodairaType::Kind::II, 0, m));
            } else {
                out.candidates.push_back(make_type(KodairaType::Kind::I, 1, m));
                out.candidates.push_back(make_type(KodairaType::Kind::II, 0, m));
                out.note = "double point with unknown branches: nodal and cuspidal "
                           "candidates both possible";
            }
            return out;
        }
        out.candidates.push_back(
            make_type(KodairaType::Kind::Unrecognized, 0, m, "irrational singular genus-1 shape"));
        return out;
    }

    if (!all_rational_minus2(norm)) {
        out.candidates.push_back(
            make_type(KodairaType::Kind::NumericClass, 0, m, shape_summary(norm)));
        return out;
    }

    if (n == 2) {
        // Validity forces the pair total to be 2; the question is whether the
        // two units share a closed point.
        const PairData* pd = norm.pair_data(0, 1);
        long long labeled = 0;
        std::map<int, long long> by_rep;
        if (pd)
            for (const auto& [l, cnt] : pd->at) {
                labeled += cnt;
                by_rep[norm.label_rep(l)] += cnt;
            }
        if (labeled == 2) {
            if (by_rep.size() == 1)
                out.candidates.push_back(make_type(KodairaType::Kind::III, 0, m));
            else
                out.candidates.push_back(make_type(KodairaType::Kind::I, 2, m));
        } else {
            out.candidates.push_back(make_type(KodairaType::Kind::I, 2, m));
            out.candidates.push_back(make_type(KodairaType::Kind::III, 0, m));
            out.note = "two intersection units with unknown location: cycle and "
                       "tangent candidates both possible";
        }
        return out;
    }

    if (n == 3) {
        bool each_one = norm.meet(0, 1) == 1 && norm.meet(0, 2) == 1 && norm.meet(1, 2) == 1;
        if (each_one && norm.component(0).mult == 1 && norm.component(1).mult == 1 &&
            norm.component(2).mult == 1) {
            std::vector<int> reps;
            bool all_labeled = true;
            for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
                const PairData* pd = norm.pair_data(i, j);
                long long labeled = 0;
                int rep = -1;
                if (pd)
                    for (const auto& [l, cnt] : pd->at) {
                        labeled += cnt;
                        rep = norm.label_rep(l);
                    }
                if (labeled != 1)
                    all_labeled = false;
                else
                    reps.push_back(rep);
            }
            if (all_labeled) {
                bool concurrent = reps[0] == reps[1] && reps[1] == reps[2];
                bool distinct = reps[0] != reps[1] && reps[1] != reps[2] && reps[0] != reps[2];
                if (concurrent)
                    out.candidates.push_back(make_type(KodairaType::Kind::IV, 0, m));
                else if (distinct)
                    out.candidates.push_back(make_type(KodairaType::Kind::I, 3, m));
                else
                    out.candidates.push_back(make_type(KodairaType::Kind::Unrecognized, 0, m,
                                                       "two of three meeting points coincide"));
            } else {
                out.candidates.push_back(make_type(KodairaType::Kind::I, 3, m));
                out.candidates.push_back(make_type(KodairaType::Kind::IV, 0, m));
                out.note = "three pairwise meetings with unknown locations: cycle and "
                           "concurrent candidates both possible";
            }
            return out;
        }
        out.candidates.push_back(
            make_type(KodairaType::Kind::NumericClass, 0, m, shape_summary(norm)));
        return out;
    }

    // Star shapes with the right multiplicities.
    {
        std::vector<long long> mults;
        for (std::size_t i = 0; i < n; ++i) mults.push_back(norm.component(i).mult);
        std::vector<long long> sorted = mults;
        std::sort(sorted.begin(), sorted.end());
        if (n == 5 && sorted == std::vector<long long>{1, 1, 1, 1, 2}) {
            std::size_t center = 0;
            while (norm.component(center).mult != 2) ++center;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                if (i == center) continue;
                if (norm.meet(i, center) != 1) ok = false;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (j != center && norm.meet(i, j) != 0) ok = false;
            }
            if (ok) {
                out.candidates.push_back(make_type(KodairaType::Kind::Dtilde4, 0, m));
                return out;
            }
        }
        if (n == 7 && sorted == std::vector<long long>{1, 1, 1, 2, 2, 2, 3}) {
            std::size_t center = 0;
            while (norm.component(center).mult != 3) ++center;
            bool ok = true;
            std::vector<std::size_t> mids, outers;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == center) continue;
                (norm.component(i).mult == 2 ? mids : outers).push_back(i);
            }
            for (std::size_t mid : mids)
                if (norm.meet(mid, center) != 1) ok = false;
            for (std::size_t o : outers) {
                if (norm.meet(o, center) != 0) ok = false;
                std::size_t hits = 0;
                for (std::size_t mid : mids)
                    if (norm.meet(o, mid) == 1) ++hits;
                if (hits != 1) ok = false;
            }
            for (std::size_t x = 0; x < mids.size() && ok; ++x)
                for (std::size_t y = x + 1; y < mids.size(); ++y)
                    if (norm.meet(mids[x], mids[y]) != 0) ok = false;
            for (std::size_t x = 0; x < outers.size() && ok; ++x)
                for (std::size_t y = x + 1; y < outers.size(); ++y)
                    if (norm.meet(outers[x], outers[y]) != 0) ok = false;
            // Each mid must carry exactly one outer: counted above via hits.
            std::vector<int> mid_load(mids.size(), 0);
            for (std::size_t oi = 0; oi < outers.size(); ++oi)
                for (std::size_t mi = 0; mi < mids.size(); ++mi)
                    if (norm.meet(outers[oi], mids[mi]) == 1) ++mid_load[mi];
            for (int load : mid_load)
                if (load != 1) ok = false;
            if (ok) {
                out.candidates.push_back(make_type(KodairaType::Kind::Etilde6, 0, m));
                return out;
            }
        }
    }

    // Cycle of length n: every component meets exactly two neighbours once.
    {
        bool unit_mults = true;
        for (std::size_t i = 0; i < n; ++i)
            if (norm.component(i).mult != 1) unit_mults = false;
        bool cycle = unit_mults;
        for (std::size_t i = 0; i < n && cycle; ++i) {
            std::size_t neighbours = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                long long v = norm.meet(i, j);
                if (v == 1)
                    ++neighbours;
                else if (v != 0)
                    cycle = false;
            }
            if (neighbours != 2) cycle = false;
        }
        if (cycle) {
            // Connectivity: walk the neighbour graph.
            std::vector<bool> seen(n, false);
            std::vector<std::size_t> stack{0};
            seen[0] = true;
            std::size_t visited = 1;
            while (!stack.empty()) {
                std::size_t i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < n; ++j)
                    if (!seen[j] && norm.meet(i, j) == 1) {
                        seen[j] = true;
                        ++visited;
                        stack.push_back(j);
                    }
            }
            if (visited == n) {
                out.candidates.push_back(
                    make_type(KodairaType::Kind::I, static_cast<long long>(n), m));
                return out;
            }
        }
    }

    out.candidates.push_back(make_type(KodairaType::Kind::NumericClass, 0, m, shape_summary(norm)));
    return out;
}

// ── numerical companions ─────────────────────────────────────────────

long long euler_char(const KodairaType& t) {
    switch (t.kind) {
    case KodairaType::Kind::Smooth: return 0;
    case KodairaType::Kind::I: return t.r;
    case KodairaType::Kind::II: return 2;
    case KodairaType::Kind::III: return 3;
    case KodairaType::Kind::IV: return 4;
    case KodairaType::Kind::Dtilde4: return 6;
    case KodairaType::Kind::Etilde6: return 8;
    default:
        fail("UnrecognizedType", "no Euler number for " + to_string(t));
    }
}

BudgetResult c2_budget(const std::vector<KodairaType>& types, long long total) {
    if (total != 12 && total != 24)
        fail("BadInput", "the topological budget is 12 or 24, got " + std::to_string(total));
    BudgetResult r;
    r.total = total;
    for (const auto& t : types) {
        r.sum += euler_char(t);
        if (r.sum > total)
            fail("BudgetExceeded", "fiber Euler numbers sum past " + std::to_string(total) +
                                       " at " + to_string(t));
    }
    r.residual = total - r.sum;
    r.exact = (r.residual == 0);
    return r;
}

Pullback pullback_type(const KodairaType& t) {
    Pullback p;
    switch (t.kind) {
    case KodairaType::Kind::I:
        p.type = make_type(KodairaType::Kind::I, 2 * t.r, t.m);
        return p;
    case KodairaType::Kind::II:
        p.type = make_type(KodairaType::Kind::III, 0, t.m);
        return p;
    case KodairaType::Kind::III:
        p.type = make_type(KodairaType::Kind::Dtilde4, 0, t.m);
        return p;
    case KodairaType::Kind::IV:
        p.type = make_type(KodairaType::Kind::Etilde6, 0, t.m);
        return p;
    default:
        fail("NotInTable", "no pullback rule for " + to_string(t));
    }
}

Rat canonical_degree(long long g_base, long long chi, const std::vector<long long>& mults) {
    if (chi != 2) fail("BadInput", "canonical degree formula is stated for chi = 2");
    if (g_base < 0) fail("BadInput", "base genus is nonnegative");
    Rat d = Rat(2 * g_base);
    for (long long m : mults) {
        if (m < 1) fail("BadInput", "fiber multiplicities are positive");
        d += Rat(m - 1, m);
    }
    return d;
}

long long hurwitz_genus(long long deg_r) {
    if (deg_r < 0) fail("BadInput", "ramification degree is nonnegative");
    if (deg_r % 2 != 0)
        fail("OddDegree", "ramification degree " + std::to_string(deg_r) + " is odd");
    return deg_r / 2 - 1;
}

bool ramification_degree_ok(long long n_prime, long long deg_r) {
    return n_prime <= deg_r && deg_r <= n_prime + 1;
}

// ── template builders ────────────────────────────────────────────────

FiberConfig double_component_template(int m, Contact contact) {
    if (m < 1) fail("BadInput", "multiplicity is positive");
    FiberConfig f;
    f.add_component("t1", -1, 2 * m);
    f.add_component("c1", -4, m);
    f.set_pair("t1", "c1", 2);
    switch (contact) {
    case Contact::Nodal:
        f.add_pair_label("t1", "c1", "p", 1);
        f.add_pair_label("t1", "c1", "q", 1);
        break;
    case Contact::Tangent:
        f.add_pair_label("t1", "c1", "p", 2);
        break;
    case Contact::Unlabeled:
        break;
    }
    return f;
}

FiberConfig cycle_template(int r, int m) {
    if (r < 1 || m < 1) fail("BadInput", "cycle length and multiplicity are positive");
    if (r == 1) return double_component_template(m, Contact::Nodal);
    FiberConfig f;
    for (int i = 1; i <= r; ++i) f.add_component("c" + std::to_string(i), -4, m);
    for (int i = 1; i <= r; ++i) f.add_component("t" + std::to_string(i), -1, 2 * m);
    for (int i = 1; i <= r; ++i) {
        int next = i % r + 1;
        f.set_pair("t" + std::to_string(i), "c" + std::to_string(i), 1);
        f.set_pair("t" + std::to_string(i), "c" + std::to_string(next), 1);
    }
    return f;
}

FiberConfig iii_template() {
    FiberConfig f;
    f.add_component("t1", -1, 4);
    f.add_component("t2", -2, 2);
    f.add_component("c1", -4, 1);
    f.add_component("c2", -4, 1);
    f.set_pair("t1", "t2", 1);
    f.set_pair("t1", "c1", 1);
    f.set_pair("t1", "c2", 1);
    return f;
}

FiberConfig iv_template() {
    FiberConfig f;
    f.add_component("t1", -1, 4);
    f.add_component("t2", -1, 4);
    f.add_component("t3", -1, 4);
    f.add_component("c1", -4, 3);
    f.add_component("c2", -4, 1);
    f.add_component("c3", -4, 1);
    f.add_component("c4", -4, 1);
    f.set_pair("t1", "c1", 1);
    f.set_pair("t2", "c1", 1);
    f.set_pair("t3", "c1", 1);
    f.set_pair("t1", "c2", 1);
    f.set_pair("t2", "c3", 1);
    f.set_pair("t3", "c4", 1);
    return f;
}

FiberConfig dtilde4_template(int m) {
    if (m < 1) fail("BadInput", "multiplicity is positive");
    FiberConfig f;
    f.add_component("z", -2, 2 * m);
    for (int i = 1; i <= 4; ++i) {
        std::string id = "a" + std::to_string(i);
        f.add_component(id, -2, m);
        f.set_pair("z", id, 1);
    }
    return f;
}

FiberConfig etilde6_template(int m) {
    if (m < 1) fail("BadInput", "multiplicity is positive");
    FiberConfig f;
    f.add_component("z", -2, 3 * m);
    for (int i = 1; i <= 3; ++i) {
        std::string mid = "m" + std::to_string(i);
        std::string outer = "o" + std::to_string(i);
        f.add_component(mid, -2, 2 * m);
        f.add_component(outer, -2, m);
        f.set_pair("z", mid, 1);
        f.set_pair(mid, outer, 1);
    }
    return f;
}

} // namespace evensets
