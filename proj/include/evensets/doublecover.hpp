#ifndef EVENSETS_DOUBLECOVER_HPP
#define EVENSETS_DOUBLECOVER_HPP

#include <string>
#include <vector>

#include "evensets/evenset.hpp"

namespace evensets {

// ════════════════════════════════════════════════════════════════════
// Double cover branched over an even set
//
// For a verified even set with sum 2L on X, the branched double cover S
// has K_S = pullback of K_X + L, so K_S^2 = 2(K_X^2 + n), chi(O_S) = 2,
// and c2(S) = 24 - K_S^2. The Kodaira trichotomy at the lattice level:
//   L = -K_X              -> K3            (needs n <= 10)
//   L != -K_X, K_X^2 = -n -> elliptic, kappa 1  (needs n <= 12)
//   -n < K_X^2 <= -1      -> general-type candidate
//   otherwise             -> infeasible
// Every verdict is conditional on the classes being realized by curves.
// ════════════════════════════════════════════════════════════════════

enum class Verdict { K3, EllipticKappa1, GeneralTypeCandidate, Infeasible };

std::string to_string(Verdict v);

struct BoundCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CoverClassification {
    Int n;
    Int kx2;
    Int ks2;
    Int chi;
    Int c2;
    Verdict verdict = Verdict::Infeasible;
    std::string reason;     // why infeasible / which regime fired
    bool conditional = true;
    std::vector<BoundCheck> bounds;

    bool all_bounds_pass() const;
};

CoverClassification classify_cover(const EvenSetReport& report);

/// 2 (3 c2 - ks2) >= 9 n, with n counting the (-2)-curves over the branch.
bool miyaoka_check(const Int& n, const Int& ks2, const Int& c2);

/// h^0(2K_X + C) = K_X^2 + n + 1 in the general-type regime -n < K_X^2 <= -1;
/// RegimeViolation outside it.
Int h0_double_adjoint(const Int& kx2, const Int& n);

enum class Regularity { Regular, Irregular, Unknown };

std::string to_string(Regularity r);

struct Feasibility {
    bool pass = true;
    std::vector<std::string> reasons; // failed constraints, human-readable
};

/// Feasible (K_S^2, n) windows for general-type covers.
/// Unknown regularity: K_S^2 in {2,4,6,8,10} with n in [2,14],[3,12],[4,10],
/// [5,8],[6,7] respectively. Regular tightens to K_S^2 <= 8 with n caps
/// 9,8,7,6. Irregular (forces q = 1) tightens to 6 <= K_S^2 <= 10, 4 <= n <= 9.
Feasibility general_type_feasibility(const Int& ks2, const Int& n, Regularity reg);

struct SlopeCheck {
    Rat lower;
    Rat middle;
    Rat upper;
    bool pass = false;
};

/// Slope inequality for a genus-g fibration on S:
///   4(g-1)/g  <=  (K_S^2 - 8(g-1)(q-1)) / (chi - (g-1)(q-1))  <=  12,
/// exact rationals throughout. DegenerateDenominator when the denominator
/// is not positive; RegimeViolation for g < 2 or q < 0.
SlopeCheck slope_check(const Int& g, const Int& q, const Int& ks2, const Int& chi);

} // namespace evensets

#endif
