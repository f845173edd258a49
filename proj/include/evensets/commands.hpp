#ifndef EVENSETS_COMMANDS_HPP
#define EVENSETS_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "evensets/lattice.hpp"
#include "evensets/report.hpp"
#include "evensets/search.hpp"

namespace evensets {

// ════════════════════════════════════════════════════════════════════
// Subcommand bodies, kept independent of the argument parser so tests
// can drive them directly. Exit codes: 0 success, 1 negative finding
// (not an even set, infeasible cover, invalid fiber, budget overflow,
// expectation mismatch), 2 usage or input errors.
// ════════════════════════════════════════════════════════════════════

struct GlobalOpts {
    bool json = false;
    Palette palette = Palette::plain();
};

struct FiberOpts {
    long long budget = 12; // 12 downstairs, 24 on the double cover
};

struct CatalogOpts {
    std::string export_path; // write the entry as a problem file; "-" = stdout
};

/// Check the curves of a problem file as an even set; run the (-1)-class
/// reduction when minus_one lines are present.
int cmd_verify(const std::string& config_path, const GlobalOpts& g, std::ostream& out,
               std::ostream& err);

/// Verify, then compute double cover invariants and the verdict. When the
/// file pins a regularity, the feasibility window is evaluated for it too.
int cmd_classify(const std::string& config_path, const GlobalOpts& g, std::ostream& out,
                 std::ostream& err);

/// Validate and classify every fiber block in the file; sum the Euler
/// numbers of definite types against the budget.
int cmd_fiber(const std::string& config_path, const FiberOpts& f, const GlobalOpts& g,
              std::ostream& out, std::ostream& err);

/// Enumerate even sets of options.n classes in the coefficient box.
int cmd_search(Ambient ambient, std::size_t k, const SearchOptions& options,
               const GlobalOpts& g, std::ostream& out, std::ostream& err);

/// With a name: rebuild the entry, check it end to end against its
/// expected invariants. Without: list the catalog.
int cmd_catalog(const std::string& name, const CatalogOpts& c, const GlobalOpts& g,
                std::ostream& out, std::ostream& err);

} // namespace evensets

#endif
