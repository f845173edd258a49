#include "evensets/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "evensets/errors.hpp"

namespace evensets {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
    fail("ParseError", "line " + std::to_string(line) + ": " + message);
}

long long to_int(const std::string& token, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        parse_fail(line, "expected an integer, got '" + token + "'");
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

DivClass class_from_tokens(const std::vector<std::string>& toks, std::size_t first,
                           std::size_t rank, std::size_t line) {
    if (toks.size() - first != rank)
        parse_fail(line, "expected " + std::to_string(rank) + " coefficients, got " +
                             std::to_string(toks.size() - first));
    std::vector<Int> v;
    v.reserve(rank);
    for (std::size_t i = first; i < toks.size(); ++i) v.emplace_back(to_int(toks[i], line));
    return DivClass(std::move(v));
}

std::string sing_kind(const SingularPoint& p) {
    if (p.branches && p.branches->size() == 2 && (*p.branches)[0] == 1 && (*p.branches)[1] == 1)
        return "node";
    if (p.branches && p.branches->size() == 1 && (*p.branches)[0] == 2) return "cusp";
    return "sing";
}

} // namespace

ProblemConfig parse_config(std::istream& in) {
    ProblemConfig cfg;
    bool have_ambient = false;
    bool have_k = false;
    bool have_regularity = false;
    bool in_fiber = false;
    NamedFiber current;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> toks = tokens_of(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        try {
            if (in_fiber) {
                if (head == "comp") {
                    if (toks.size() < 4) parse_fail(line_no, "comp needs id, self, mult");
                    std::string id = toks[1];
                    long long self = to_int(toks[2], line_no);
                    long long mult = to_int(toks[3], line_no);
                    long long pa = 0;
                    std::vector<std::string> kinds;
                    for (std::size_t i = 4; i < toks.size(); ++i) {
                        if (toks[i] == "pa") {
                            if (i + 1 >= toks.size()) parse_fail(line_no, "pa needs a value");
                            pa = to_int(toks[++i], line_no);
                        } else if (toks[i] == "node" || toks[i] == "cusp" || toks[i] == "sing") {
                            kinds.push_back(toks[i]);
                        } else {
                            parse_fail(line_no, "unknown comp annotation '" + toks[i] + "'");
                        }
                    }
                    current.fiber.add_component(id, self, mult, pa);
                    for (const auto& kind : kinds) current.fiber.declare_singular(id, kind);
                } else if (head == "pair") {
                    if (toks.size() < 4) parse_fail(line_no, "pair needs two ids and a total");
                    current.fiber.set_pair(toks[1], toks[2], to_int(toks[3], line_no));
                    for (std::size_t i = 4; i < toks.size(); ++i) {
                        const std::string& t = toks[i];
                        if (t.empty() || t[0] != '@')
                            parse_fail(line_no, "expected @label, got '" + t + "'");
                        std::string name = t.substr(1);
                        long long count = 1;
                        if (auto star = name.find('*'); star != std::string::npos) {
                            count = to_int(name.substr(star + 1), line_no);
                            name.erase(star);
                        }
                        if (name.empty()) parse_fail(line_no, "empty label name");
                        current.fiber.add_pair_label(toks[1], toks[2], name, count);
                    }
                } else if (head == "end") {
                    if (toks.size() != 1) parse_fail(line_no, "end takes no arguments");
                    cfg.fibers.push_back(std::move(current));
                    current = NamedFiber{};
                    in_fiber = false;
                } else {
                    parse_fail(line_no, "unknown directive '" + head + "' inside a fiber block");
                }
                continue;
            }

            if (head == "ambient") {
                if (have_ambient) parse_fail(line_no, "duplicate ambient directive");
                if (toks.size() != 2) parse_fail(line_no, "ambient takes one word");
                if (toks[1] == "plane")
                    cfg.ambient = Ambient::Plane;
                else if (toks[1] == "quadric")
                    cfg.ambient = Ambient::Quadric;
                else
                    parse_fail(line_no, "ambient is 'plane' or 'quadric', got '" + toks[1] + "'");
                have_ambient = true;
            } else if (head == "k") {
                if (have_k) parse_fail(line_no, "duplicate k directive");
                if (toks.size() != 2) parse_fail(line_no, "k takes one integer");
                long long k = to_int(toks[1], line_no);
                if (k < 0) parse_fail(line_no, "k is nonnegative");
                cfg.k = static_cast<std::size_t>(k);
                have_k = true;
            } else if (head == "regularity") {
                if (have_regularity) parse_fail(line_no, "duplicate regularity directive");
                if (toks.size() != 2) parse_fail(line_no, "regularity takes one word");
                if (toks[1] == "regular")
                    cfg.regularity = Regularity::Regular;
                else if (toks[1] == "irregular")
                    cfg.regularity = Regularity::Irregular;
                else if (toks[1] == "unknown")
                    cfg.regularity = Regularity::Unknown;
                else
                    parse_fail(line_no, "regularity is regular, irregular, or unknown");
                have_regularity = true;
            } else if (head == "curve" || head == "minus_one") {
                if (!have_ambient || !have_k)
                    parse_fail(line_no, "ambient and k must precede " + head + " lines");
                DivClass d =
                    class_from_tokens(toks, 1, cfg.lattice().rank(), line_no);
                (head == "curve" ? cfg.curves : cfg.minus_ones).push_back(std::move(d));
            } else if (head == "fiber") {
                if (toks.size() != 2) parse_fail(line_no, "fiber takes one name");
                in_fiber = true;
                current.name = toks[1];
            } else {
                parse_fail(line_no, "unknown directive '" + head + "'");
            }
        } catch (const Error& e) {
            if (e.code() == "ParseError") throw;
            parse_fail(line_no, e.what());
        }
    }
    if (in_fiber) fail("ParseError", "unterminated fiber block '" + current.name + "'");
    return cfg;
}

ProblemConfig parse_config_string(const std::string& text) {
    std::istringstream is(text);
    return parse_config(is);
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail("BadInput", "cannot read '" + path + "'");
    return parse_config(f);
}

std::string serialize_config(const ProblemConfig& c) {
    std::ostringstream os;
    os << "ambient " << (c.ambient == Ambient::Plane ? "plane" : "quadric") << "\n";
    os << "k " << c.k << "\n";
    os << "regularity " << to_string(c.regularity) << "\n";
    auto write_class = [&os](const char* head, const DivClass& d) {
        os << head;
        for (std::size_t i = 0; i < d.rank(); ++i) os << " " << d[i];
        os << "\n";
    };
    for (const auto& d : c.curves) write_class("curve", d);
    for (const auto& d : c.minus_ones) write_class("minus_one", d);
    for (const auto& nf : c.fibers) {
        os << "fiber " << nf.name << "\n";
        const FiberConfig& f = nf.fiber;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const FiberComponent& comp = f.component(i);
            os << "  comp " << comp.id << " " << comp.self_int << " " << comp.mult;
            if (comp.pa != 0) os << " pa " << comp.pa;
            for (const auto& p : comp.sing) os << " " << sing_kind(p);
            os << "\n";
        }
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                const PairData* pd = f.pair_data(i, j);
                if (!pd || pd->total == 0) continue;
                os << "  pair " << f.component(i).id << " " << f.component(j).id << " "
                   << pd->total;
                std::map<std::string, long long> named;
                for (const auto& [l, cnt] : pd->at)
                    if (cnt > 0) named[f.label_name(l)] += cnt;
                for (const auto& [name, cnt] : named) {
                    os << " @" << name;
                    if (cnt != 1) os << "*" << cnt;
                }
                os << "\n";
            }
        os << "end\n";
    }
    return os.str();
}

ProblemConfig config_from_catalog(const CatalogEntry& entry) {
    ProblemConfig c;
    c.ambient = entry.lattice.ambient();
    c.k = entry.lattice.k();
    c.curves = entry.curves;
    int i = 0;
    for (const auto& f : entry.fibers) {
        ++i;
        c.fibers.push_back({"f" + std::to_string(i), f});
    }
    return c;
}

} // namespace evensets
