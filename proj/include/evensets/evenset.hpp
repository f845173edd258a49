#ifndef EVENSETS_EVENSET_HPP
#define EVENSETS_EVENSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "evensets/lattice.hpp"

namespace evensets {

// ════════════════════════════════════════════════════════════════════
// Even sets of (-4)-classes
//
// A verified set C_1..C_n consists of pairwise-orthogonal classes with
// C_i.C_i = -4, arithmetic genus 0, and sum C = 2L. The half-class then
// satisfies L.L = -n, K.L = n, (K+L)^2 = K.K + n, checked identically.
// All statements are lattice-level certificates: whether the classes are
// realized by actual disjoint curves is conditional on the geometry.
// ════════════════════════════════════════════════════════════════════

struct IdentityCheck {
    std::string name;
    Int lhs;
    Int rhs;
    bool pass = false;
};

struct EvenSetReport {
    SurfaceLattice lattice;
    std::vector<DivClass> curves;
    std::size_t n = 0;
    DivClass sum;
    DivClass half;                       // L with sum = 2L
    Int kx2;                             // K.K of the blown-up surface
    bool half_is_anticanonical = false;  // L == -K
    std::vector<IdentityCheck> identities;
    // Nefness of K+L is never decided here; every report carries the caveat.
    static constexpr const char* nef_caveat =
        "nefness of K+L is conditional on geometric realizability; not decided numerically";
};

/// Full even-set verification. Throws on the first failing check:
///   NotMinus4(i), DuplicateCurve(i,j), NotDisjoint(i,j), NotTwoDivisible(slot),
///   IdentityViolation(name).
EvenSetReport verify_even_set(const SurfaceLattice& lat, std::vector<DivClass> curves);

/// Halve a 2-divisible class; NotTwoDivisible names the first odd slot.
DivClass half_class(const DivClass& c);

struct NefReduction {
    EvenSetReport report;
    std::vector<std::string> contracted; // basis names, in contraction order
    std::vector<std::string> non_basis;  // qualifying (-1)-classes that were not basis vectors
};

/// Repeatedly blow down declared (-1)-classes that are basis exceptional
/// classes orthogonal to every curve, transporting the set and re-verifying.
/// K.K rises by one per contraction; n never changes. Qualifying classes
/// that are not basis vectors are reported, not contracted.
NefReduction nef_reduction(const EvenSetReport& report,
                           std::vector<DivClass> declared_minus_ones);

} // namespace evensets

#endif
