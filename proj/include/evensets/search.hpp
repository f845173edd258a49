#ifndef EVENSETS_SEARCH_HPP
#define EVENSETS_SEARCH_HPP

#include <vector>

#include "evensets/lattice.hpp"

namespace evensets {

// ════════════════════════════════════════════════════════════════════
// Brute-force search over a coefficient box
//
// Two enumeration kernels produce every (-4)-class of genus 0 whose
// coefficients lie in [-bound, bound]: a pruned depth-first search
// (optionally OpenMP-parallel over the leading coefficient) and a plain
// odometer kept as the reference the pruned kernel is tested against.
// Both emit classes in the same deterministic order. On top of that,
// subsets of pairwise disjoint classes with 2-divisible sum are
// collected, optionally deduplicated by basis symmetry.
// ════════════════════════════════════════════════════════════════════

struct SearchOptions {
    long long bound = 3;
    std::size_t n = 1;    // curves per set
    bool dedup = true;    // keep one representative per symmetry orbit
    bool parallel = true; // pruned kernel may fan out over the leading coefficient
};

struct SearchResult {
    std::vector<std::vector<DivClass>> sets; // each sorted, emitted in search order
    std::size_t candidate_count = 0;         // (-4)-classes in the box
    std::size_t raw_count = 0;               // sets before orbit dedup
};

/// Pruned enumeration of genus-0 (-4)-classes in the box.
/// Throws BoundsTooLarge when k > 12 or bound > 6.
std::vector<DivClass> enumerate_neg4_classes(const SurfaceLattice& lat, long long bound,
                                             bool parallel = true);

/// Odometer over the whole box, testing every tuple. Reference kernel.
std::vector<DivClass> enumerate_neg4_classes_reference(const SurfaceLattice& lat,
                                                       long long bound);

/// Sets of options.n pairwise disjoint classes from the box whose sum is
/// 2-divisible. Every emitted set passes the even-set verifier.
SearchResult search_even_sets(const SurfaceLattice& lat, const SearchOptions& options);

/// Canonical matrix of a curve set under permutations of the exceptional
/// basis classes (and the swap of the two rulings for the quadric base):
/// the returned form is itself a member of the orbit, so two sets with
/// equal forms are always equivalent. Ties beyond an internal budget are
/// left in refined order, which can split (never merge) an orbit.
std::vector<std::vector<Int>> canonical_orbit_form(const SurfaceLattice& lat,
                                                   const std::vector<DivClass>& curves);

} // namespace evensets

#endif
