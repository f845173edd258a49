#include "evensets/doublecover.hpp"

namespace evensets {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::K3: return "K3";
        case Verdict::EllipticKappa1: return "EllipticKappa1";
        case Verdict::GeneralTypeCandidate: return "GeneralTypeCandidate";
        case Verdict::Infeasible: return "Infeasible";
    }
    return "?";
}

std::string to_string(Regularity r) {
    switch (r) {
        case Regularity::Regular: return "regular";
        case Regularity::Irregular: return "irregular";
        case Regularity::Unknown: return "unknown";
    }
    return "?";
}

bool CoverClassification::all_bounds_pass() const {
    for (const auto& b : bounds)
        if (!b.pass) return false;
    return true;
}

bool miyaoka_check(const Int& n, const Int& ks2, const Int& c2) {
    return 2 * (3 * c2 - ks2) >= 9 * n;
}

Int h0_double_adjoint(const Int& kx2, const Int& n) {
    if (!(-n < kx2 && kx2 <= -1))
        fail("RegimeViolation", "K_X^2 = " + kx2.str() + " is not in (-n, -1] for n = " + n.str());
    return kx2 + n + 1;
}

namespace {

struct Window {
    long ks2;
    long lo;
    long hi;
};

// Unknown-regularity windows; Regular n-caps keyed by K_S^2.
constexpr Window kGlobalWindows[] = {{2, 2, 14}, {4, 3, 12}, {6, 4, 10}, {8, 5, 8}, {10, 6, 7}};
constexpr Window kRegularCaps[] = {{2, 2, 9}, {4, 3, 8}, {6, 4, 7}, {8, 5, 6}};

const Window* find_window(const Window* table, std::size_t len, const Int& ks2) {
    for (std::size_t i = 0; i < len; ++i)
        if (ks2 == table[i].ks2) return &table[i];
    return nullptr;
}

} // namespace

Feasibility general_type_feasibility(const Int& ks2, const Int& n, Regularity reg) {
    Feasibility f;
    auto flag = [&](const std::string& why) {
        f.pass = false;
        f.reasons.push_back(why);
    };

    if ((ks2 & 1) != 0) flag("K_S^2 = " + ks2.str() + " is odd; covers here have even K_S^2");
    const Window* w = find_window(kGlobalWindows, std::size(kGlobalWindows), ks2);
    if (!w) {
        flag("K_S^2 = " + ks2.str() + " is outside 2..10");
        return f;
    }
    if (n < w->lo || n > w->hi)
        flag("n = " + n.str() + " is outside [" + std::to_string(w->lo) + ", " +
             std::to_string(w->hi) + "] for K_S^2 = " + ks2.str());

    switch (reg) {
        case Regularity::Unknown:
            break;
        case Regularity::Regular: {
            const Window* r = find_window(kRegularCaps, std::size(kRegularCaps), ks2);
            if (!r)
                flag("regular covers need K_S^2 <= 8, got " + ks2.str());
            else if (n > r->hi)
                flag("regular covers with K_S^2 = " + ks2.str() + " need n <= " +
                     std::to_string(r->hi) + ", got " + n.str());
            break;
        }
        case Regularity::Irregular:
            if (ks2 < 6 || ks2 > 10)
                flag("irregular covers need 6 <= K_S^2 <= 10, got " + ks2.str());
            if (n < 4 || n > 9)
                flag("irregular covers need 4 <= n <= 9, got " + n.str());
            break;
    }
    return f;
}

SlopeCheck slope_check(const Int& g, const Int& q, const Int& ks2, const Int& chi) {
    if (g < 2) fail("RegimeViolation", "fibration genus g = " + g.str() + " must be >= 2");
    if (q < 0) fail("BadInput", "irregularity q must be nonnegative");

    const Int gq = (g - 1) * (q - 1);
    const Int den = chi - gq;
    if (den <= 0)
        fail("DegenerateDenominator",
             "chi - (g-1)(q-1) = " + den.str() + " must be positive");

    SlopeCheck s;
    s.lower = Rat(4 * (g - 1), g);
    s.middle = Rat(ks2 - 8 * gq, den);
    s.upper = 12;
    s.pass = (s.lower <= s.middle) && (s.middle <= s.upper);
    return s;
}

CoverClassification classify_cover(const EvenSetReport& report) {
    CoverClassification out;
    out.n = Int(report.n);
    out.kx2 = report.kx2;
    out.ks2 = 2 * (report.kx2 + out.n);
    out.chi = 2;
    out.c2 = 24 - out.ks2;

    auto bound = [&](std::string name, bool pass, std::string detail) {
        out.bounds.push_back({std::move(name), pass, std::move(detail)});
        return out.bounds.back().pass;
    };

    bound("noether: c2 + K_S^2 = 24", out.c2 + out.ks2 == 24,
          out.c2.str() + " + " + out.ks2.str());
    bound("K_X^2 range: -n <= K_X^2 <= -1", -out.n <= out.kx2 && out.kx2 <= -1, out.kx2.str());
    bound("hard cap: n <= 16", out.n <= 16, out.n.str());
    bound("miyaoka: 2(3c2 - K_S^2) >= 9n", miyaoka_check(out.n, out.ks2, out.c2),
          Int(2 * (3 * out.c2 - out.ks2)).str() + " vs " + Int(9 * out.n).str());

    if (report.half_is_anticanonical) {
        out.verdict = Verdict::K3;
        out.reason = "half-class equals -K_X";
        if (!bound("K3 regime: n <= 10", out.n <= 10, out.n.str())) {
            out.verdict = Verdict::Infeasible;
            out.reason = "half-class equals -K_X but n = " + out.n.str() + " exceeds 10";
        }
    } else if (out.kx2 == -out.n) {
        out.verdict = Verdict::EllipticKappa1;
        out.reason = "K_X^2 = -n with L != -K_X";
        if (!bound("elliptic regime: n <= 12", out.n <= 12, out.n.str())) {
            out.verdict = Verdict::Infeasible;
            out.reason = "K_X^2 = -n but n = " + out.n.str() + " exceeds 12";
        }
    } else if (-out.n < out.kx2 && out.kx2 <= -1) {
        out.verdict = Verdict::GeneralTypeCandidate;
        out.reason = "-n < K_X^2 <= -1";
        bound("h0(2K_X + C) = K_X^2 + n + 1 >= 2", out.kx2 + out.n + 1 >= 2,
              Int(out.kx2 + out.n + 1).str());
        bound("2 <= K_S^2 <= 2(n-1)", 2 <= out.ks2 && out.ks2 <= 2 * (out.n - 1), out.ks2.str());
        Feasibility f = general_type_feasibility(out.ks2, out.n, Regularity::Unknown);
        std::string why;
        for (const auto& r : f.reasons) why += (why.empty() ? "" : "; ") + r;
        if (!bound("general-type window (regularity unknown)", f.pass, why)) {
            out.verdict = Verdict::Infeasible;
            out.reason = "general-type window fails: " + why;
        }
    } else {
        out.verdict = Verdict::Infeasible;
        out.reason = "K_X^2 = " + out.kx2.str() + " is outside [-n, -1] for n = " + out.n.str();
    }

    if (out.verdict != Verdict::Infeasible && !out.all_bounds_pass()) {
        out.verdict = Verdict::Infeasible;
        for (const auto& b : out.bounds)
            if (!b.pass) { out.reason = "bound fails: " + b.name; break; }
    }
    return out;
}

} // namespace evensets
