#ifndef EVENSETS_CATALOG_HPP
#define EVENSETS_CATALOG_HPP

#include <string>
#include <vector>

#include "evensets/doublecover.hpp"
#include "evensets/fibers.hpp"
#include "evensets/lattice.hpp"

namespace evensets {

// ════════════════════════════════════════════════════════════════════
// Built-in constructions
//
// Each entry fixes a surface lattice, the classes of an even set of
// (-4)-curves on it, the invariants the construction is expected to
// produce, and (for the pencil families) the singular fibers carried
// along. Every entry is checked end to end by the test suite: the
// curves verify as an even set and the classification reproduces the
// expected numbers.
// ════════════════════════════════════════════════════════════════════

struct ExpectedInvariants {
    Verdict verdict = Verdict::Infeasible;
    long long n = 0;
    long long kx2 = 0;
    long long ks2 = 0;
};

struct CatalogEntry {
    std::string name;
    std::string description; // construction recipe
    SurfaceLattice lattice;
    std::vector<DivClass> curves;
    ExpectedInvariants expected;
    std::vector<FiberConfig> fibers; // singular members carried by the pencil families
    int halphen_index = 1;           // index of the pencil the construction hangs on
};

/// Entry names, in catalog order.
std::vector<std::string> catalog_names();

/// Build one entry. Throws UnknownEntry for names not in catalog_names().
CatalogEntry catalog_build(const std::string& name);

/// Build every entry, in catalog order.
std::vector<CatalogEntry> catalog_all();

} // namespace evensets

#endif
